#include "kernels_internal.hpp"

// NEON kernels for aarch64, structured one-to-one with the AVX2 variants.
// NEON is baseline on aarch64, so there is no runtime feature check.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace egan::kern {
namespace {

inline void two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t va = vld1q_f64(a + i);
        float64x2_t vb = vld1q_f64(b + i);
        acc = vfmaq_f64(acc, va, vb);
    }
    double sum = vaddvq_f64(acc);
    for (; i < n; ++i)
        sum += a[i] * b[i];
    return sum;
}

double dot2_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t s = vdupq_n_f64(0.0);
    float64x2_t comp = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t va = vld1q_f64(a + i);
        float64x2_t vb = vld1q_f64(b + i);
        float64x2_t p = vmulq_f64(va, vb);
        float64x2_t ep = vfmaq_f64(vnegq_f64(p), va, vb); // exact remainder
        float64x2_t t = vaddq_f64(s, p);
        float64x2_t bb = vsubq_f64(t, s);
        float64x2_t es = vaddq_f64(vsubq_f64(s, vsubq_f64(t, bb)),
                                   vsubq_f64(p, bb));
        s = t;
        comp = vaddq_f64(comp, vaddq_f64(es, ep));
    }
    double sl[2] = {vgetq_lane_f64(s, 0), vgetq_lane_f64(s, 1)};
    double cl[2] = {vgetq_lane_f64(comp, 0), vgetq_lane_f64(comp, 1)};
    double sum = 0.0, c = 0.0;
    for (int k = 0; k < 2; ++k) {
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

double norm_sq_neon(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t va = vld1q_f64(a + i);
        acc = vfmaq_f64(acc, va, va);
    }
    double sum = vaddvq_f64(acc);
    for (; i < n; ++i)
        sum += a[i] * a[i];
    return sum;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vy = vld1q_f64(y + i);
        float64x2_t vx = vld1q_f64(x + i);
        vst1q_f64(y + i, vfmaq_f64(vy, va, vx));
    }
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

void sub_neon(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i)
        out[i] = a[i] - b[i];
}

void matvec_neon(const double* m, std::size_t rows, std::size_t cols,
                 const double* x, double* out) {
    for (std::size_t r = 0; r < rows; ++r)
        out[r] = dot_neon(m + r * cols, x, cols);
}

} // namespace

const Kernels* neon_kernels() {
    static const Kernels k = {
        "neon", dot_neon, dot2_neon, norm_sq_neon, axpy_neon, sub_neon, matvec_neon,
    };
    return &k;
}

} // namespace egan::kern

#else

namespace egan::kern {

const Kernels* neon_kernels() {
    return nullptr;
}

} // namespace egan::kern

#endif
