#include "kernels_internal.hpp"

// AVX2+FMA kernels.  This translation unit is compiled with -mavx2 -mfma on
// x86-64; callers must go through avx2_kernels(), which performs the runtime
// CPU check before exposing the function table.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

namespace egan::kern {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

inline void two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        acc = _mm256_fmadd_pd(va, vb, acc);
    }
    double sum = hsum(acc);
    for (; i < n; ++i)
        sum += a[i] * b[i];
    return sum;
}

double dot2_avx2(const double* a, const double* b, std::size_t n) {
    // Lane-wise compensated accumulation: two_prod and two_sum use only
    // exact IEEE add/sub/FMA, so they vectorize without changing semantics.
    __m256d s = _mm256_setzero_pd();
    __m256d comp = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        __m256d p = _mm256_mul_pd(va, vb);
        __m256d ep = _mm256_fmsub_pd(va, vb, p); // exact product remainder
        __m256d t = _mm256_add_pd(s, p);
        __m256d bb = _mm256_sub_pd(t, s);
        __m256d es = _mm256_add_pd(_mm256_sub_pd(s, _mm256_sub_pd(t, bb)),
                                   _mm256_sub_pd(p, bb));
        s = t;
        comp = _mm256_add_pd(comp, _mm256_add_pd(es, ep));
    }
    // Fold the four (sum, compensation) lanes with scalar two_sum so the
    // reduction itself stays compensated.
    alignas(32) double sl[4], cl[4];
    _mm256_store_pd(sl, s);
    _mm256_store_pd(cl, comp);
    double sum = 0.0, c = 0.0;
    for (int k = 0; k < 4; ++k) {
        double t, e;
        two_sum(sum, sl[k], t, e);
        sum = t;
        c += e + cl[k];
    }
    for (; i < n; ++i) {
        double p = a[i] * b[i];
        double ep = std::fma(a[i], b[i], -p);
        double t, es;
        two_sum(sum, p, t, es);
        sum = t;
        c += es + ep;
    }
    return sum + c;
}

double norm_sq_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    double sum = hsum(acc);
    for (; i < n; ++i)
        sum += a[i] * a[i];
    return sum;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d vx = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, vx, vy));
    }
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

void sub_avx2(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(out + i, _mm256_sub_pd(va, vb));
    }
    for (; i < n; ++i)
        out[i] = a[i] - b[i];
}

void matvec_avx2(const double* m, std::size_t rows, std::size_t cols,
                 const double* x, double* out) {
    for (std::size_t r = 0; r < rows; ++r)
        out[r] = dot_avx2(m + r * cols, x, cols);
}

} // namespace

const Kernels* avx2_kernels() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma"))
        return nullptr;
    static const Kernels k = {
        "avx2", dot_avx2, dot2_avx2, norm_sq_avx2, axpy_avx2, sub_avx2, matvec_avx2,
    };
    return &k;
}

} // namespace egan::kern

#else

namespace egan::kern {

const Kernels* avx2_kernels() {
    return nullptr;
}

} // namespace egan::kern

#endif
