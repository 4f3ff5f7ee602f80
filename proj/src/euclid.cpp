#include "egan/euclid.hpp"

#include <algorithm>
#include <cmath>

namespace egan {

EuclideanSimplex::EuclideanSimplex(std::vector<Vec> vertices)
    : verts_(std::move(vertices)) {
    if (verts_.size() < 3)
        throw DimensionMismatch("simplex needs at least 3 vertices (dim >= 2)");
    std::size_t d = verts_[0].dim();
    if (verts_.size() != d + 1)
        throw DimensionMismatch("simplex needs exactly dim+1 vertices");
    for (const Vec& v : verts_) {
        if (v.dim() != d)
            throw DimensionMismatch("mixed vertex dimensions");
        if (!v.all_finite())
            throw InvalidArgument("vertex coordinates must be finite");
    }
    dim_ = static_cast<int>(d);
    gram_det_ = normalized_gram_det(verts_);
    if (gram_det_ < kDegenerateGramDet)
        throw Degenerate("simplex is numerically flat");
    near_degenerate_ = gram_det_ < kNearDegenerateGramDet;
}

Sphere circumsphere(const EuclideanSimplex& s) {
    // |x - v_i|^2 = |x - v_0|^2 linearizes to 2 (v_i - v_0) . x = |v_i|^2 - |v_0|^2.
    std::size_t d = static_cast<std::size_t>(s.dim());
    Mat a(d, d);
    Vec b(d);
    const Vec& v0 = s.vertex(0);
    double n0 = norm_sq(v0);
    for (std::size_t i = 0; i < d; ++i) {
        const Vec& vi = s.vertex(i + 1);
        for (std::size_t j = 0; j < d; ++j)
            a(i, j) = 2.0 * (vi[j] - v0[j]);
        b[i] = norm_sq(vi) - n0;
    }
    Vec center;
    try {
        center = solve_linear(a, b);
    } catch (const SingularMatrix&) {
        throw Degenerate("circumsphere: vertex system is singular");
    }
    double lo = 0.0, hi = 0.0, sum = 0.0;
    for (std::size_t i = 0; i <= d; ++i) {
        double ri = norm(s.vertex(i) - center);
        sum += ri;
        if (i == 0)
            lo = hi = ri;
        lo = std::min(lo, ri);
        hi = std::max(hi, ri);
    }
    double radius = sum / static_cast<double>(d + 1);
    if (hi - lo > 1e-7 * radius)
        throw Degenerate("circumsphere: vertices not equidistant from center");
    return {center, radius};
}

Sphere insphere(const EuclideanSimplex& s) {
    std::size_t d = static_cast<std::size_t>(s.dim());
    const auto& vs = s.vertices();
    double vol = gram_volume(vs, s.dim());
    if (!(vol > 0.0))
        throw Degenerate("insphere: zero volume");
    std::vector<double> facet(d + 1);
    double total = 0.0;
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<Vec> f;
        f.reserve(d);
        for (std::size_t j = 0; j <= d; ++j)
            if (j != i)
                f.push_back(vs[j]);
        facet[i] = gram_volume(f, s.dim() - 1);
        total += facet[i];
    }
    Vec center(d);
    for (std::size_t i = 0; i <= d; ++i)
        center += (facet[i] / total) * vs[i];
    double radius = static_cast<double>(d) * vol / total;
    return {center, radius};
}

double signed_facet_distance(const EuclideanSimplex& s,
                             std::size_t opposite_vertex, const Vec& point) {
    std::size_t d = static_cast<std::size_t>(s.dim());
    if (opposite_vertex > d)
        throw DimensionMismatch("signed_facet_distance: vertex index out of range");
    const auto& vs = s.vertices();
    std::size_t base = (opposite_vertex == 0) ? 1 : 0;
    std::vector<Vec> edges;
    for (std::size_t j = 0; j <= d; ++j)
        if (j != opposite_vertex && j != base)
            edges.push_back(vs[j] - vs[base]);
    std::vector<Vec> q = orthonormalized(edges);
    if (q.size() != d - 1)
        throw Degenerate("signed_facet_distance: facet is flat");
    Vec w = project_off(vs[opposite_vertex] - vs[base], q);
    double wn = norm(w);
    if (!(wn > kAbsFloor))
        throw Degenerate("signed_facet_distance: vertex lies in facet plane");
    return dot((1.0 / wn) * w, point - vs[base]);
}

double simplex_volume(const EuclideanSimplex& s) {
    return gram_volume(s.vertices(), s.dim());
}

EganReport egan_report(const EuclideanSimplex& s) {
    Sphere circ = circumsphere(s);
    Sphere in = insphere(s);
    double n = static_cast<double>(s.dim());
    double dist = norm(circ.center - in.center);
    double slack = (circ.radius - n * in.radius) *
                       (circ.radius + (n - 2.0) * in.radius) -
                   dist * dist;
    return {s.dim(), circ.radius, in.radius, dist, slack, s.near_degenerate()};
}

EuclideanSimplex regular_simplex(int dim) {
    if (dim < 2)
        throw DimensionMismatch("regular_simplex: dim must be >= 2");
    // Canonical basis vectors of R^(dim+1) are mutually sqrt(2) apart; express
    // them in an orthonormal basis of their affine hull and rescale to edge 1.
    std::size_t m = static_cast<std::size_t>(dim) + 1;
    std::vector<Vec> corners(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i)
        corners[i][i] = 1.0;
    std::vector<Vec> edges;
    for (std::size_t i = 1; i < m; ++i)
        edges.push_back(corners[i] - corners[0]);
    std::vector<Vec> q = orthonormalized(edges);
    double scale = 1.0 / std::sqrt(2.0);
    std::vector<Vec> verts;
    for (std::size_t i = 0; i < m; ++i) {
        Vec x(static_cast<std::size_t>(dim));
        Vec rel = corners[i] - corners[0];
        for (std::size_t j = 0; j < q.size(); ++j)
            x[j] = scale * dot(q[j], rel);
        verts.push_back(x);
    }
    return EuclideanSimplex(std::move(verts));
}

} // namespace egan
