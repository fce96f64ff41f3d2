#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace artmod::testing {

// Two-sided exact p by listing every way to pick which n1 of the pooled
// ranks belong to the first sample.
inline double enumeration_p(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n1 = a.size(), n = a.size() + b.size();
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    auto u_of = [&](const std::vector<bool>& first) {
        double u = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (first[i] && !first[j]) u += pooled[i] > pooled[j] ? 1.0 : (pooled[i] == pooled[j] ? 0.5 : 0.0);
        return u;
    };
    std::vector<bool> observed(n, false);
    std::fill(observed.begin(), observed.begin() + n1, true);
    const double u_obs = u_of(observed);
    const double mu = double(n1) * double(n - n1) / 2.0;
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - n1, pick.end(), true);
    std::size_t total = 0, extreme = 0;
    do {
        const double u = u_of(pick);
        ++total;
        if (std::abs(u - mu) >= std::abs(u_obs - mu) - 1e-9) ++extreme;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return std::min(1.0, double(extreme) / double(total));
}

}  // namespace artmod::testing
