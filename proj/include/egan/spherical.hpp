#pragma once

#include "egan/linalg.hpp"

#include <vector>

// Spherical simplices: m linearly independent unit vectors in R^m viewed as
// points of S^(m-1), their circumscribed/inscribed caps, and polar duality
// (u_i . v_j = 0 for i != j, u_i . v_i > 0).  The circumscribed cap of a
// simplex coincides with the inscribed cap of its polar: same center, radii
// summing to pi/2.

namespace egan {

// Absolute tolerance on unit-vector dot products in the polarity test.
inline constexpr double kPolarAtol = 1e-9;

// Vertex matrices with |det| below this are rejected as linearly dependent.
// The floor sits barely above rounding noise on purpose: large-sphere lifts
// of Euclidean simplices legitimately reach |det| ~ (R/H)^(m-1), around
// 1e-13 for a tetrahedron lifted to H = 1e4 R.  Exactly dependent vertices
// still land at a few ulps and are caught.
inline constexpr double kSphericalDependentDet = 1e-15;

class SphericalSimplex {
public:
    // Takes m >= 3 unit vectors of dimension m (unit within rtol; they are
    // renormalized exactly on construction).  Linear dependence or repeated
    // vertices -> Degenerate; m = 2 -> DimensionMismatch.
    explicit SphericalSimplex(std::vector<Vec> vertices,
                              double rtol = kDefaultRtol);

    int m() const { return m_; }
    const std::vector<Vec>& vertices() const { return verts_; }
    const Vec& vertex(std::size_t i) const { return verts_[i]; }
    // Columns are the vertices.
    Mat vertex_matrix() const;

private:
    int m_ = 0;
    std::vector<Vec> verts_;
};

struct SphericalCap {
    Vec center;                 // unit vector
    double angular_radius = 0.0; // in (0, pi/2)
};

struct PolarityResult {
    bool ok = false;
    double max_offdiag = 0.0; // largest |u_i . v_j|, i != j
    double min_diag = 0.0;    // smallest u_i . v_i
};

// Smallest cap containing the vertices on its boundary: u_i . center equals
// cos(angular_radius) for every i, positive by the sign convention.
SphericalCap circum_cap(const SphericalSimplex& s);

// Columns of the inverse-transpose of the vertex matrix, normalized and
// sign-corrected.  polar_simplex(polar_simplex(s)) == s up to rounding.
SphericalSimplex polar_simplex(const SphericalSimplex& s);

PolarityResult verify_polarity(const SphericalSimplex& u,
                               const SphericalSimplex& v,
                               double atol = kPolarAtol);

// Cap tangent to every facet from inside: center = circumcenter of the polar
// simplex, radius = pi/2 - circumradius of the polar simplex.
SphericalCap inscribed_cap(const SphericalSimplex& s);

struct PolarPair {
    SphericalSimplex u;
    SphericalSimplex v;
};

// (s, polar_simplex(s)), validated.
PolarPair make_polar_pair(const SphericalSimplex& s);

// Canonical-basis simplex {e_1, ..., e_m}: self-polar, all caps symmetric.
SphericalSimplex identity_simplex(int m);

} // namespace egan
