#pragma once

#include "egan/linalg.hpp"

// Hyperbolic (Lorentz) SVD of 2x2 matrices: an admissible matrix factors as
// R_t * diag(K, L) * R_s with K > L > 0, where R_x is the hyperbolic rotation
// [[cosh x, sinh x], [sinh x, cosh x]].  R_x preserves the signature form
// J = diag(1, -1): R_x * J * R_x = J.

namespace egan {

struct Mat2 {
    // row-major [[x, y], [z, t]]
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;
};

struct LorentzFactors {
    double K = 0.0;
    double L = 0.0;
    double t = 0.0;
    double s = 0.0;
};

// Admissibility: x - t > |z - y|, x + t > |z + y|, x*t - z*y > 0 (the first
// bound is accepted with |z - y| = 0, a boundary the decomposition still
// handles).
bool lorentz_admissible(const Mat2& m);

// Factors with K + L = sqrt((x+t)^2 - (z+y)^2), K - L = sqrt((x-t)^2 -
// (z-y)^2), t + s = asinh((z+y)/(K+L)), t - s = asinh((z-y)/(K-L)).  Both
// radicands are evaluated in factored (difference * sum) form.  Throws
// NotAdmissible on inadmissible input or when K - L underflows.
LorentzFactors lorentz_svd(const Mat2& m);

// R_t * diag(K, L) * R_s; the forward path, used as the reconstruction
// oracle for lorentz_svd.
Mat2 compose_lorentz(const LorentzFactors& f);

// n x n identity with the top-left 2x2 block replaced by R_x.
Mat hyperbolic_rotation(double x, std::size_t n);

} // namespace egan
