#include "artmod/audit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "artmod/error.hpp"

namespace artmod::audit {

namespace {

constexpr std::size_t kExactLimit = 20;

// Number of arrangements of n1 + n2 distinct values giving each U in
// [0, n1 n2], built with the recurrence f(i, j, u) = f(i-1, j, u-j) + f(i, j-1, u).
std::vector<double> exact_u_counts(std::size_t n1, std::size_t n2) {
    const std::size_t max_u = n1 * n2;
    // table[j][u] for the current i
    std::vector<std::vector<double>> prev(n2 + 1, std::vector<double>(max_u + 1, 0.0));
    for (std::size_t j = 0; j <= n2; ++j) prev[j][0] = 1.0;  // i = 0: only U = 0
    for (std::size_t i = 1; i <= n1; ++i) {
        std::vector<std::vector<double>> cur(n2 + 1, std::vector<double>(max_u + 1, 0.0));
        cur[0][0] = 1.0;
        for (std::size_t j = 1; j <= n2; ++j) {
            for (std::size_t u = 0; u <= i * j; ++u) {
                const double take_a = u >= j ? prev[j][u - j] : 0.0;
                cur[j][u] = take_a + cur[j - 1][u];
            }
        }
        prev = std::move(cur);
    }
    return prev[n2];
}

}  // namespace

std::string_view to_string(UTestMethod m) noexcept {
    return m == UTestMethod::exact ? "exact" : "normal_approx_tie_corrected";
}

UTestResult mann_whitney_u(std::span<const double> a, std::span<const double> b, UTestRequest request) {
    if (a.empty() || b.empty()) throw InvalidArgument("Mann-Whitney U needs two nonempty samples");
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;

    std::vector<double> values;
    values.reserve(n);
    values.insert(values.end(), a.begin(), a.end());
    values.insert(values.end(), b.begin(), b.end());
    for (double v : values)
        if (!std::isfinite(v)) throw InvalidArgument("Mann-Whitney U: non-finite sample value");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return values[x] < values[y]; });

    std::vector<double> rank(n);
    double tie_term = 0.0;  // sum of t^3 - t over tie groups
    bool has_ties = false;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) rank[order[k]] = midrank;
        const double t = static_cast<double>(j - i);
        if (j - i > 1) has_ties = true;
        tie_term += t * t * t - t;
        i = j;
    }

    double r1 = 0.0;
    for (std::size_t i = 0; i < n1; ++i) r1 += rank[i];
    UTestResult res;
    res.n1 = n1;
    res.n2 = n2;
    res.u_statistic = r1 - static_cast<double>(n1) * static_cast<double>(n1 + 1) / 2.0;
    const double prod = static_cast<double>(n1) * static_cast<double>(n2);

    bool exact = false;
    switch (request) {
        case UTestRequest::automatic: exact = n <= kExactLimit && !has_ties; break;
        case UTestRequest::exact:
            if (has_ties) throw InvalidArgument("exact Mann-Whitney p-value requires tie-free samples");
            exact = true;
            break;
        case UTestRequest::asymptotic: exact = false; break;
    }

    if (exact) {
        res.method = UTestMethod::exact;
        const auto counts = exact_u_counts(n1, n2);
        const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
        const auto u = static_cast<std::size_t>(std::llround(res.u_statistic));
        double lower = 0.0, upper = 0.0;
        for (std::size_t k = 0; k <= u; ++k) lower += counts[k];
        for (std::size_t k = u; k < counts.size(); ++k) upper += counts[k];
        res.p_value = std::min(1.0, 2.0 * std::min(lower, upper) / total);
        return res;
    }

    res.method = UTestMethod::normal_approx_tie_corrected;
    const double mu = prod / 2.0;
    const double nd = static_cast<double>(n);
    const double var = prod / 12.0 * ((nd + 1.0) - tie_term / (nd * (nd - 1.0)));
    if (!(var > 0.0)) {
        res.p_value = 1.0;  // every value tied: no evidence either way
        return res;
    }
    const double u_big = std::max(res.u_statistic, prod - res.u_statistic);
    const double z = (u_big - mu - 0.5) / std::sqrt(var);
    res.p_value = std::clamp(std::erfc(z / std::sqrt(2.0)), 0.0, 1.0);
    return res;
}

}  // namespace artmod::audit
