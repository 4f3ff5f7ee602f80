#include "egan/spherical.hpp"

#include "egan/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace egan {

SphericalSimplex::SphericalSimplex(std::vector<Vec> vertices, double rtol)
    : verts_(std::move(vertices)) {
    if (verts_.size() == 2)
        throw DimensionMismatch("spherical simplex with m = 2 is rejected; "
                                "the construction needs m >= 3");
    if (verts_.size() < 3)
        throw DimensionMismatch("spherical simplex needs m >= 3 vertices");
    std::size_t m = verts_.size();
    double tol = std::max(rtol, kAbsFloor);
    for (Vec& v : verts_) {
        if (v.dim() != m)
            throw DimensionMismatch("spherical simplex needs m vectors of dimension m");
        if (!v.all_finite())
            throw InvalidArgument("vertex coordinates must be finite");
        double n = norm(v);
        if (std::abs(n - 1.0) > tol)
            throw NotUnit("spherical simplex vertices must lie on the unit sphere");
        v *= 1.0 / n;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (unit_angle(verts_[i], verts_[j]) < 1e-12)
                throw Degenerate("spherical simplex has repeated vertices");
    m_ = static_cast<int>(m);
    if (std::abs(det(vertex_matrix())) < kSphericalDependentDet)
        throw Degenerate("spherical simplex vertices are linearly dependent");
}

Mat SphericalSimplex::vertex_matrix() const {
    return Mat::from_columns(verts_);
}

namespace {

// Newton step for the cap center: keep the dots u_i . t equal by solving for
// a tangential correction w with (u_i - u_0) . (t + w) = 0, w . t = 0.
Vec refine_center(const std::vector<Vec>& verts, const Vec& t) {
    std::size_t m = verts.size();
    Mat a(m, m);
    Vec b(m);
    const auto& kern = kern::active_kernels();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        Vec row = verts[i + 1] - verts[0];
        double rn = norm(row);
        if (!(rn > kAbsFloor))
            throw Degenerate("circum_cap: repeated vertices");
        row *= 1.0 / rn;
        for (std::size_t j = 0; j < m; ++j)
            a(i, j) = row[j];
        b[i] = -kern.dot2(row.data(), t.data(), m);
    }
    for (std::size_t j = 0; j < m; ++j)
        a(m - 1, j) = t[j];
    b[m - 1] = 0.0;
    Vec w = solve_linear(a, b);
    return normalized(t + w);
}

} // namespace

SphericalCap circum_cap(const SphericalSimplex& s) {
    std::size_t m = static_cast<std::size_t>(s.m());
    Vec ones(m);
    for (std::size_t i = 0; i < m; ++i)
        ones[i] = 1.0;
    Vec t;
    try {
        t = normalized(solve_linear(s.vertex_matrix().transposed(), ones));
        double mean_dot = 0.0;
        for (const Vec& u : s.vertices())
            mean_dot += dot(u, t);
        if (mean_dot < 0.0)
            t *= -1.0; // sign convention: cos(angular_radius) > 0
        // Two Newton corrections sharpen the center far beyond the plain
        // solve when the vertex matrix is ill-conditioned (tiny caps).
        t = refine_center(s.vertices(), t);
        t = refine_center(s.vertices(), t);
    } catch (const SingularMatrix&) {
        throw Degenerate("circum_cap: vertex matrix is singular");
    }
    double lo = 0.0, hi = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double th = unit_angle(s.vertex(i), t);
        sum += th;
        if (i == 0)
            lo = hi = th;
        lo = std::min(lo, th);
        hi = std::max(hi, th);
    }
    double radius = sum / static_cast<double>(m);
    if (hi - lo > 1e-6 * std::max(radius, 1e-3))
        throw Degenerate("circum_cap: vertices not equidistant from center");
    if (!(radius > 0.0) || !(radius < std::numbers::pi / 2))
        throw Degenerate("circum_cap: no cap of radius below pi/2 exists");
    return {t, radius};
}

SphericalSimplex polar_simplex(const SphericalSimplex& s) {
    std::size_t m = static_cast<std::size_t>(s.m());
    Mat w;
    try {
        w = solve_linear(s.vertex_matrix().transposed(), Mat::identity(m));
    } catch (const SingularMatrix&) {
        throw Degenerate("polar_simplex: vertex matrix is singular");
    }
    std::vector<Vec> polar;
    polar.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vec v = normalized(w.col(i));
        if (dot(s.vertex(i), v) < 0.0)
            v *= -1.0; // sign correction: u_i . v_i > 0
        polar.push_back(std::move(v));
    }
    return SphericalSimplex(std::move(polar));
}

PolarityResult verify_polarity(const SphericalSimplex& u,
                               const SphericalSimplex& v, double atol) {
    if (u.m() != v.m())
        throw DimensionMismatch("verify_polarity: simplices of different dimension");
    std::size_t m = static_cast<std::size_t>(u.m());
    PolarityResult res;
    res.min_diag = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double d = dot(u.vertex(i), v.vertex(j));
            if (i == j)
                res.min_diag = std::min(res.min_diag, d);
            else
                res.max_offdiag = std::max(res.max_offdiag, std::abs(d));
        }
    }
    res.ok = res.max_offdiag <= atol && res.min_diag > atol;
    return res;
}

SphericalCap inscribed_cap(const SphericalSimplex& s) {
    SphericalCap polar_circum = circum_cap(polar_simplex(s));
    return {polar_circum.center,
            std::numbers::pi / 2 - polar_circum.angular_radius};
}

PolarPair make_polar_pair(const SphericalSimplex& s) {
    PolarPair p{s, polar_simplex(s)};
    PolarityResult check = verify_polarity(p.u, p.v);
    if (!check.ok)
        throw NotPolar("make_polar_pair: computed polar fails the polarity test");
    return p;
}

SphericalSimplex identity_simplex(int m) {
    if (m < 3)
        throw DimensionMismatch("identity_simplex: m must be >= 3");
    std::vector<Vec> verts(static_cast<std::size_t>(m),
                           Vec(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    return SphericalSimplex(std::move(verts));
}

} // namespace egan
