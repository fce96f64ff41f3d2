#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace artmod::numkit {

/// Seeded generator used for every shuffle, sample and initialization.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard *distributions* are not portable across library
/// implementations, so bounded integers, uniforms and normals are derived
/// here from raw engine output:
///   uniform_below(n): rejection sampling on the top of the 64-bit range
///   uniform01():      (x >> 11) * 2^-53
///   normal():         Box-Muller, one variate per call
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform real in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal variate.
    double normal();

    /// In-place Fisher-Yates shuffle (from the back, j drawn in [0, i]).
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace artmod::numkit
