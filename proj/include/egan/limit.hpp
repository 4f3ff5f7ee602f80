#pragma once

#include "egan/euclid.hpp"
#include "egan/spherical.hpp"

#include <vector>

// Large-sphere limit: lift a Euclidean simplex onto a sphere of radius
// sqrt(H^2 + R^2) tangent-like above its circumcenter (pole at height H) and
// watch the spherical cap metrics, rescaled by sqrt(H^2 + R^2), converge to
// the Euclidean ones at rate O(1/H^2).

namespace egan {

// Heights above this multiple of the circumradius are rejected: cancellation
// in sqrt(H^2 + R^2) - H eats the remaining signal.
inline constexpr double kMaxHeightFactor = 1e6;

struct EmbeddingRow {
    double H = 0.0;
    double beta_H = 0.0;  // circumscribed cap radius (= arctan(R/H))
    double Gamma_H = 0.0; // inscribed cap radius
    double alpha_H = 0.0; // angle between the two cap centers
    double scaled_R = 0.0; // tan(beta_H)  * sqrt(H^2+R^2)
    double scaled_r = 0.0; // tan(Gamma_H) * sqrt(H^2+R^2)
    double scaled_d = 0.0; // tan(alpha_H) * sqrt(H^2+R^2)
    double spherical_slack = 0.0; // unscaled tan-metric slack, n = dim
};

// Unit vectors (v_i - O, -H)/sqrt(H^2+R^2) from the pole above circumcenter O.
// Throws NonPositiveHeight for H <= 0, HeightOutOfRange above the cutoff.
SphericalSimplex embed_on_sphere(const EuclideanSimplex& s, double H);

EmbeddingRow embedding_metrics(const EuclideanSimplex& s, double H);

// (scaled_R - n scaled_r)(scaled_R + (n-2) scaled_r) - scaled_d^2;
// converges to the Euclidean slack.
double scaled_slack(const EmbeddingRow& row, int dim);

struct ConvergenceTable {
    int dim = 0;
    double limit_R = 0.0; // Euclidean circumradius
    double limit_r = 0.0; // Euclidean inradius
    double limit_d = 0.0; // Euclidean center distance
    double euclid_slack = 0.0;
    std::vector<EmbeddingRow> rows;
};

// Rows for each height (positive, strictly increasing).  Verifies along the
// way that |scaled_R - limit_R| strictly decreases past H = 10 R, that the
// scaled slack approaches the Euclidean slack, and that scaled_d dominates
// the chord between the cap centers; ConvergenceFailure otherwise.
ConvergenceTable convergence_table(const EuclideanSimplex& s,
                                   const std::vector<double>& heights);

// {10, 100, 1000, 10000} * R.
std::vector<double> default_heights(double circumradius);

// sqrt(H^2 + R^2) - H evaluated without cancellation.
double sphere_center_gap(double H, double R);

// Radial projection of a unit vector at the pole back to the base hyperplane;
// returns hyperplane coordinates relative to the circumcenter.  The last
// component of `unit_from_pole` must be negative (pointing at the hyperplane).
Vec project_center_to_hyperplane(double H, const Vec& unit_from_pole);

} // namespace egan
