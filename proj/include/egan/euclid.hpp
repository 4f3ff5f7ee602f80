#pragma once

#include "egan/linalg.hpp"

#include <span>
#include <vector>

// Euclidean simplex geometry: circumscribed and inscribed spheres and the
// slack of the inequality (R - n r)(R + (n-2) r) >= d^2 relating their radii
// to the distance d between their centers.  For n = 2 the slack reduces to
// the classical triangle identity R^2 - 2 R r - d^2 = 0.

namespace egan {

class EuclideanSimplex {
public:
    // Takes dim+1 affinely independent vertices of dimension dim >= 2.
    // Normalized Gram determinant below kDegenerateGramDet -> Degenerate;
    // the band up to kNearDegenerateGramDet is accepted but flagged.
    explicit EuclideanSimplex(std::vector<Vec> vertices);

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return verts_; }
    const Vec& vertex(std::size_t i) const { return verts_[i]; }
    double gram_det() const { return gram_det_; } // normalized, scale-free
    bool near_degenerate() const { return near_degenerate_; }

private:
    int dim_ = 0;
    std::vector<Vec> verts_;
    double gram_det_ = 0.0;
    bool near_degenerate_ = false;
};

struct Sphere {
    Vec center;
    double radius = 0.0;
};

struct EganReport {
    int dim = 0;
    double R = 0.0;         // circumradius
    double r = 0.0;         // inradius
    double d_centers = 0.0; // distance between the two centers
    double slack = 0.0;     // (R - n r)(R + (n-2) r) - d_centers^2
    bool near_degenerate = false;
};

// Center solves the equal-squared-distance linear system; equidistance to all
// vertices within rtol.  Throws Degenerate if the system is singular.
Sphere circumsphere(const EuclideanSimplex& s);

// Center is the facet-volume barycentric combination of the vertices;
// radius = dim * volume / (sum of facet volumes).  The center is strictly
// inside, equidistant to all facet hyperplanes.
Sphere insphere(const EuclideanSimplex& s);

EganReport egan_report(const EuclideanSimplex& s);

// Signed distance from a point to the hyperplane spanned by the facet
// opposite `opposite_vertex`; positive on the side of that vertex.
double signed_facet_distance(const EuclideanSimplex& s,
                             std::size_t opposite_vertex, const Vec& point);

double simplex_volume(const EuclideanSimplex& s);

// Regular simplex with unit edge in dimension dim, deterministic orientation.
EuclideanSimplex regular_simplex(int dim);

} // namespace egan
