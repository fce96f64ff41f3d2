"""Freeze scipy's tie- and continuity-corrected Mann-Whitney results.

Usage: dump_mwu_pairs | python3 mwu_reference.py > ../support/mwu_reference.inc
"""
import sys

from scipy.stats import mannwhitneyu

samples = {}
for line in sys.stdin:
    parts = line.split()
    samples.setdefault(int(parts[0]), {})[parts[1]] = [float(x) for x in parts[2:]]

print("// Generated by tests/tools/mwu_reference.py; {u, p} per pair.")
for i in sorted(samples):
    r = mannwhitneyu(samples[i]["a"], samples[i]["b"], alternative="two-sided", method="asymptotic", use_continuity=True)
    print("{%.17g, %.17g}," % (r.statistic, r.pvalue))
# 200 vs 200 with 70 and 16 ones.
a = [1.0] * 70 + [0.0] * 130
b = [1.0] * 16 + [0.0] * 184
r = mannwhitneyu(a, b, alternative="two-sided", method="asymptotic", use_continuity=True)
print("{%.17g, %.17g}," % (r.statistic, r.pvalue))
