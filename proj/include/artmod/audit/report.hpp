#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "artmod/audit/metrics.hpp"
#include "artmod/audit/stats.hpp"

namespace artmod::audit {

struct AuditDataset {
    std::string name;
    dataset::Manifest manifest;  // role required
};

struct ClassifierRun {
    std::string classifier;
    std::string dataset;
    VerdictMap verdicts;
};

struct BreakdownEntry {
    std::string classifier;  // "unanimous" for agreement-based slices
    std::string dataset;
    GroupBreakdown breakdown;
};

struct AgreementEntry {
    std::string dataset;
    AgreementResult result;
};

struct TestEntry {
    std::string classifier;
    std::string comparison;  // e.g. "misclassification D01 vs D02", "unsafe female vs male on D02"
    UTestResult result;
};

struct AuditReport {
    std::vector<MetricRow> metrics;
    std::vector<BreakdownEntry> breakdowns;
    std::vector<AgreementEntry> agreements;
    std::vector<TestEntry> tests;
};

/// Everything the bias audit reports, for every classifier run:
///  - unsafe rate and recall per (classifier, dataset);
///  - `keys` breakdowns on art datasets, per classifier and for the
///    unanimously-unsafe set (which also gets an artist breakdown);
///  - agreement sets on every dataset covered by two or more classifiers;
///  - Mann-Whitney U tests on per-image misclassification indicators between
///    every pair of art datasets, and between female- and male-tagged images
///    within each art dataset.
AuditReport build_audit(const std::vector<AuditDataset>& datasets, const std::vector<ClassifierRun>& runs,
                        const std::vector<GroupKey>& keys = {GroupKey::gender, GroupKey::period});

nlohmann::json to_json(const AuditReport& report);
nlohmann::json to_json(const UTestResult& result);

/// `classifier,dataset,role,unsafe,total,unsafe_rate,recall_hits,recall`
std::string metrics_csv(const AuditReport& report);
/// `classifier,dataset,key,group,total,flagged,rate,share`
std::string breakdowns_csv(const AuditReport& report);

}  // namespace artmod::audit
