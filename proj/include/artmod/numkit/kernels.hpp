#pragma once

#include <cstddef>
#include <string_view>

namespace artmod::numkit {

/// Inner-loop primitives. Every table entry has a scalar reference version;
/// vectorized variants must agree with it to rounding (summation order may
/// differ, so results are not bit-identical across tables).
///
/// f32 inputs are accumulated in double precision.
struct KernelTable {
    std::string_view name;

    double (*dot_f32)(const float* a, const float* b, std::size_t n);
    // out[0] = <a,b>, out[1] = <a,a>, out[2] = <b,b> in a single pass.
    void (*dot3_f32)(const float* a, const float* b, std::size_t n, double out[3]);
    double (*dot_f64)(const double* a, const double* b, std::size_t n);
    double (*sq_l2_f64)(const double* a, const double* b, std::size_t n);
    // y += alpha * x
    void (*axpy_f64)(double alpha, const double* x, double* y, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

/// The AVX2+FMA table, or nullptr when it was not compiled in or the running
/// CPU lacks the instructions.
const KernelTable* avx2_kernels() noexcept;

/// The table used by the library. Chosen once per process: the widest
/// supported variant, unless the environment variable ARTMOD_SIMD=scalar
/// forces the reference kernels.
const KernelTable& kernels() noexcept;

}  // namespace artmod::numkit
