#include "egan/limit.hpp"

#include <cmath>
#include <sstream>

namespace egan {

namespace {

struct Lift {
    SphericalSimplex simplex;
    double circum_r;     // Euclidean circumradius
    double sphere_r;     // sqrt(H^2 + R^2)
};

Lift lift_simplex(const EuclideanSimplex& s, double H) {
    if (!(H > 0.0) || !std::isfinite(H))
        throw NonPositiveHeight("embed_on_sphere: height must be positive");
    Sphere circ = circumsphere(s);
    if (H > kMaxHeightFactor * circ.radius)
        throw HeightOutOfRange("embed_on_sphere: height exceeds the cutoff of "
                               "1e6 circumradii");
    double rho = std::hypot(H, circ.radius);
    std::size_t d = static_cast<std::size_t>(s.dim());
    std::vector<Vec> lifted;
    lifted.reserve(d + 1);
    for (const Vec& v : s.vertices()) {
        Vec w(d + 1);
        for (std::size_t j = 0; j < d; ++j)
            w[j] = (v[j] - circ.center[j]) / rho;
        w[d] = -H / rho;
        lifted.push_back(std::move(w));
    }
    return {SphericalSimplex(std::move(lifted)), circ.radius, rho};
}

} // namespace

SphericalSimplex embed_on_sphere(const EuclideanSimplex& s, double H) {
    return lift_simplex(s, H).simplex;
}

EmbeddingRow embedding_metrics(const EuclideanSimplex& s, double H) {
    Lift lift = lift_simplex(s, H);
    SphericalCap circ = circum_cap(lift.simplex);
    SphericalCap insc = inscribed_cap(lift.simplex);
    EmbeddingRow row;
    row.H = H;
    row.beta_H = circ.angular_radius;
    row.Gamma_H = insc.angular_radius;
    row.alpha_H = unit_angle(circ.center, insc.center);
    row.scaled_R = std::tan(row.beta_H) * lift.sphere_r;
    row.scaled_r = std::tan(row.Gamma_H) * lift.sphere_r;
    row.scaled_d = std::tan(row.alpha_H) * lift.sphere_r;
    double n = static_cast<double>(s.dim());
    double tr = std::tan(row.beta_H);
    double ti = std::tan(row.Gamma_H);
    double td = std::tan(row.alpha_H);
    row.spherical_slack = (tr - n * ti) * (tr + (n - 2.0) * ti) - td * td;
    return row;
}

double scaled_slack(const EmbeddingRow& row, int dim) {
    double n = static_cast<double>(dim);
    return (row.scaled_R - n * row.scaled_r) *
               (row.scaled_R + (n - 2.0) * row.scaled_r) -
           row.scaled_d * row.scaled_d;
}

ConvergenceTable convergence_table(const EuclideanSimplex& s,
                                   const std::vector<double>& heights) {
    if (heights.empty())
        throw InvalidArgument("convergence_table: need at least one height");
    for (std::size_t i = 0; i < heights.size(); ++i) {
        if (!(heights[i] > 0.0))
            throw NonPositiveHeight("convergence_table: heights must be positive");
        if (i > 0 && !(heights[i] > heights[i - 1]))
            throw InvalidArgument("convergence_table: heights must be strictly "
                                  "increasing");
    }

    EganReport base = egan_report(s);
    ConvergenceTable table;
    table.dim = s.dim();
    table.limit_R = base.R;
    table.limit_r = base.r;
    table.limit_d = base.d_centers;
    table.euclid_slack = base.slack;
    for (double h : heights)
        table.rows.push_back(embedding_metrics(s, h));

    auto fail = [](const std::string& what) {
        throw ConvergenceFailure("convergence_table: " + what);
    };
    // Noise floor below which differences carry no information.  Taller
    // lifts are thinner and their cap solves lose accuracy roughly linearly
    // in H/R (equality cases sit exactly on this floor, e.g. regular
    // simplices, whose scaled slack is zero at every height).
    auto plateau_at = [&](const EmbeddingRow& row) {
        return 1e-13 * std::max(1.0, base.R * base.R) *
               std::max(1.0, row.H / (10.0 * base.R));
    };
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const EmbeddingRow& row = table.rows[i];
        // positivity of the spherical inequality at every finite height
        if (row.spherical_slack < -1e-9 * std::max(1.0, row.scaled_R * row.scaled_R))
            fail("negative spherical slack at finite height");
        // scaled center distance dominates the chord between cap centers
        double rho = std::hypot(row.H, base.R);
        double chord = 2.0 * rho * std::sin(row.alpha_H / 2.0);
        if (row.scaled_d < chord - 1e-9 * std::max(1.0, chord))
            fail("scaled center distance fell below the center chord");
        if (i == 0)
            continue;
        const EmbeddingRow& prev = table.rows[i - 1];
        if (prev.H < 10.0 * base.R)
            continue; // below the asymptotic regime, no monotonicity claim
        double plateau = std::max(plateau_at(prev), plateau_at(row));
        double err_prev = std::abs(prev.scaled_R - base.R);
        double err_here = std::abs(row.scaled_R - base.R);
        if (!(err_here < err_prev) && !(err_here <= plateau && err_prev <= plateau))
            fail("|scaled_R - R| failed to decrease between heights");
        double gap_prev = std::abs(scaled_slack(prev, table.dim) - base.slack);
        double gap_here = std::abs(scaled_slack(row, table.dim) - base.slack);
        if (!(gap_here < gap_prev) && !(gap_here <= plateau && gap_prev <= plateau))
            fail("scaled slack stopped approaching the Euclidean slack");
    }
    return table;
}

std::vector<double> default_heights(double circumradius) {
    return {10.0 * circumradius, 100.0 * circumradius, 1000.0 * circumradius,
            10000.0 * circumradius};
}

double sphere_center_gap(double H, double R) {
    return R * R / (std::hypot(H, R) + H);
}

Vec project_center_to_hyperplane(double H, const Vec& unit_from_pole) {
    std::size_t d = unit_from_pole.dim() - 1;
    double last = unit_from_pole[d];
    if (!(last < -kAbsFloor))
        throw InvalidArgument("project_center_to_hyperplane: direction must "
                              "point at the hyperplane");
    double t = -H / last;
    Vec out(d);
    for (std::size_t j = 0; j < d; ++j)
        out[j] = t * unit_from_pole[j];
    return out;
}

} // namespace egan
