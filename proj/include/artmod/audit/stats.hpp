#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace artmod::audit {

enum class UTestMethod { exact, normal_approx_tie_corrected };

std::string_view to_string(UTestMethod m) noexcept;

/// Which p-value computation to use. `automatic` picks exact enumeration
/// when n1 + n2 <= 20 and there are no ties, the normal approximation
/// (tie and continuity corrected) otherwise.
enum class UTestRequest { automatic, exact, asymptotic };

struct UTestResult {
    double u_statistic = 0.0;  // U of the first sample: R1 - n1 (n1 + 1) / 2
    double p_value = 1.0;      // two-sided
    UTestMethod method = UTestMethod::exact;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

/// Mann-Whitney U test with midranks for ties.
/// Throws InvalidArgument on an empty sample, a non-finite value, or an
/// exact request on tied data.
UTestResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                           UTestRequest request = UTestRequest::automatic);

}  // namespace artmod::audit
