#include "egan/kernels.hpp"

#include <cmath>

// Reference kernels.  Plain loops, no pragmas: these define the semantics
// the SIMD variants are tested against.

namespace egan::kern {
namespace {

// s = fl(a+b), err = exact remainder (Knuth two-sum, no branch on magnitudes)
inline void two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
}

// p = fl(a*b), err = exact remainder via FMA
inline void two_prod(double a, double b, double& p, double& err) {
    p = a * b;
    err = std::fma(a, b, -p);
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[i];
    return acc;
}

double dot2_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double p, ep;
        two_prod(a[i], b[i], p, ep);
        double t, es;
        two_sum(s, p, t, es);
        s = t;
        comp += es + ep;
    }
    return s + comp;
}

double norm_sq_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * a[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    // fma keeps every variant bit-identical: the SIMD versions fuse too.
    for (std::size_t i = 0; i < n; ++i)
        y[i] = std::fma(alpha, x[i], y[i]);
}

void sub_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i] - b[i];
}

void matvec_scalar(const double* m, std::size_t rows, std::size_t cols,
                   const double* x, double* out) {
    for (std::size_t r = 0; r < rows; ++r)
        out[r] = dot_scalar(m + r * cols, x, cols);
}

} // namespace

const Kernels& scalar_kernels() {
    static const Kernels k = {
        "scalar",   dot_scalar, dot2_scalar,
        norm_sq_scalar, axpy_scalar, sub_scalar, matvec_scalar,
    };
    return k;
}

} // namespace egan::kern
