// AVX2/FMA variants. Functions carry a target attribute instead of the whole
// translation unit being built with -mavx2, so no inline code from shared
// headers is ever emitted with AVX2 instructions. Only raw pointer loops here.

#include "artmod/numkit/kernels.hpp"

#if defined(ARTMOD_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))

#include <immintrin.h>

#define ARTMOD_AVX2 __attribute__((target("avx2,fma")))

namespace artmod::numkit {
namespace {

ARTMOD_AVX2 inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

ARTMOD_AVX2 double dot_f32(const float* a, const float* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        acc0 = _mm256_fmadd_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(va)),
                               _mm256_cvtps_pd(_mm256_castps256_ps128(vb)), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(va, 1)),
                               _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1)), acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

ARTMOD_AVX2 void dot3_f32(const float* a, const float* b, std::size_t n, double out[3]) {
    __m256d ab = _mm256_setzero_pd();
    __m256d aa = _mm256_setzero_pd();
    __m256d bb = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_cvtps_pd(_mm_loadu_ps(a + i));
        __m256d vb = _mm256_cvtps_pd(_mm_loadu_ps(b + i));
        ab = _mm256_fmadd_pd(va, vb, ab);
        aa = _mm256_fmadd_pd(va, va, aa);
        bb = _mm256_fmadd_pd(vb, vb, bb);
    }
    double sab = hsum(ab), saa = hsum(aa), sbb = hsum(bb);
    for (; i < n; ++i) {
        const double x = a[i];
        const double y = b[i];
        sab += x * y;
        saa += x * x;
        sbb += y * y;
    }
    out[0] = sab;
    out[1] = saa;
    out[2] = sbb;
}

ARTMOD_AVX2 double dot_f64(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

ARTMOD_AVX2 double sq_l2_f64(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

ARTMOD_AVX2 void axpy_f64(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable* avx2_kernels() noexcept {
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    static const KernelTable table{"avx2", dot_f32, dot3_f32, dot_f64, sq_l2_f64, axpy_f64};
    return supported ? &table : nullptr;
}

}  // namespace artmod::numkit

#else

namespace artmod::numkit {
const KernelTable* avx2_kernels() noexcept { return nullptr; }
}  // namespace artmod::numkit

#endif
