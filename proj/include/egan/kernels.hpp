#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

// Low-level array kernels behind the linear algebra layer.
//
// Every kernel exists as a portable scalar reference implementation plus
// optional SIMD variants (AVX2+FMA on x86-64, NEON on aarch64) compiled in
// their own translation units.  The active set is resolved once at startup:
// the EGAN_VERIFY_SIMD environment variable ("scalar", "avx2", "neon",
// "auto") wins, otherwise the best variant the CPU supports is used.
// Variants are interchangeable up to floating-point reassociation; the test
// suite checks scalar/SIMD equivalence within a few ulps.

namespace egan::kern {

struct Kernels {
    const char* name;
    // sum a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // compensated dot product (Ogita-Rump dot2): error ~ eps, independent of n
    double (*dot2)(const double* a, const double* b, std::size_t n);
    // sum a[i]*a[i]
    double (*norm_sq)(const double* a, std::size_t n);
    // y[i] = fma(alpha, x[i], y[i]); fused in every variant, so results are
    // bit-identical across them
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // out[i] = a[i] - b[i]
    void (*sub)(const double* a, const double* b, double* out, std::size_t n);
    // row-major rows x cols matrix times vector
    void (*matvec)(const double* m, std::size_t rows, std::size_t cols,
                   const double* x, double* out);
};

// Portable reference implementation; always available.
const Kernels& scalar_kernels();

// Variant selected at startup (see above).  Stable for the process lifetime.
const Kernels& active_kernels();

// All variants usable on this machine, scalar first.  For equivalence tests.
std::vector<const Kernels*> available_kernels();

// Lookup by name ("scalar", "avx2", "neon"); nullptr if absent or unsupported.
const Kernels* kernels_by_name(std::string_view name);

} // namespace egan::kern
