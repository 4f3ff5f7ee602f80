#pragma once

#include "egan/spherical.hpp"

// Matrix certificate for the spherical circumradius/inradius inequality.
// Given a polar pair (U, V) with circumradii beta, gamma and circumcenter
// distance alpha, the 2x2 matrix [[bc cos a, c sin a], [-b sin a, cos a]]
// (b = tan beta, c = tan gamma) admits a hyperbolic SVD with factors K, L;
// the certificate transforms both vertex matrices so that their mutual-
// polarity structure exhibits trace(J D) = K - L - (m-2) >= 0, which is
// the inequality's margin.

namespace egan {

struct AlignedPair {
    std::vector<Vec> basis; // orthonormal; basis[0] = circumcenter of u
    Mat Umat;               // u vertices as columns, coordinates in basis
    Mat Vmat;               // v vertices as columns, coordinates in the rotated basis
    Mat A;                  // Givens rotation by alpha in the (e1, e2) plane
};

// Builds the aligned coordinates.  The rotated basis (rows of A times basis)
// has the circumcenter of v as its first vector, so row 0 of Umat is
// constantly cos(beta) and row 0 of Vmat constantly cos(gamma).
// Throws Degenerate when the pair fails the polarity test.
AlignedPair align_pair(const PolarPair& p);

struct CertificateReport {
    int m = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double b = 0.0;
    double c = 0.0;
    double K = 0.0;
    double L = 0.0;
    double margin = 0.0;   // sqrt((bc-1)^2 cos^2 a - (b+c)^2 sin^2 a) - (m-2)
    double trace_JD = 0.0; // K - L - (m-2), the decomposition-path value
    double max_offdiag_UtV = 0.0;
    double max_diag_JB2U = 0.0;
    double max_diag_JC2V = 0.0;
    bool semispace_ok = false;
};

// Full pipeline: align, decompose, transform, and verify that
// (i) U'^T V' is diagonal with positive diagonal,
// (ii) U'^T (J D) U' and V'^T (J D) V' have zero diagonals,
// (iii) the first rows of U' and V' are strictly positive.
// Structural residuals are checked against rtol * scale; the margin must
// clear an evaluation-noise tolerance (never smaller than rtol) that grows
// with the pair's conditioning.  Throws Degenerate for invalid pairs,
// CertificateViolation when a check fails.
CertificateReport run_certificate(const PolarPair& p,
                                  double rtol = kDefaultRtol);

// The margin evaluated directly from the angles, in factored form.
// Throws Degenerate when the radicand is negative beyond roundoff.
double direct_margin(double alpha, double beta, double gamma, int m);

// |trace(M) - sum_i M(u_i, v_i) / (u_i . v_i)| for M = diag(m_diag) with
// m_diag[0] > 0 and the rest negative.  Requires U^T V to have a positive
// diagonal (NotPolar otherwise); when columns are M-isotropic the pairing
// values M(u_i, v_i) are additionally checked to be nonnegative.
double trace_identity_check(const Mat& u, const Mat& v, const Vec& m_diag);

// beta + gamma - alpha - pi/2; strictly positive for every valid pair.
double angle_lemma_margin(const PolarPair& p);

// Slack of (R - n r)(R + (n-2) r) >= d^2 with R = tan(circumradius),
// r = tan(inscribed radius), d = tan(center distance), n = m - 1.
double spherical_gd_slack(const SphericalSimplex& s);

// Spherical triangle identity residual sin^2(R-r) - sin^2 r cos^2 R - sin^2 d
// (radii and center distance as angles).  Requires m = 3.
double spherical_euler_residual(const SphericalSimplex& s);

} // namespace egan
