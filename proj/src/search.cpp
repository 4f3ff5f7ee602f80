#include "egan/search.hpp"

#include "egan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace egan {

namespace {

// Shapes thinner than this are walled off: the inequality is stated for
// nondegenerate simplices, and the slack computation turns to noise there.
constexpr double kBarrierGramDet = 1e-10;

std::vector<Vec> unflatten(const std::vector<double>& x, std::size_t dim) {
    std::vector<Vec> vs(dim + 1, Vec(dim));
    for (std::size_t i = 0; i <= dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) vs[i][j] = x[i * dim + j];
    return vs;
}

std::vector<double> flatten(const std::vector<Vec>& vs) {
    const std::size_t dim = vs[0].dim();
    std::vector<double> x(dim * (dim + 1));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) x[i * dim + j] = vs[i][j];
    return x;
}

double objective(const std::vector<double>& x, std::size_t dim) {
    const std::vector<Vec> vs = unflatten(x, dim);
    for (const Vec& v : vs)
        if (!v.all_finite()) return 1e9;
    const double gdet = normalized_gram_det(vs);
    if (gdet < kBarrierGramDet) {
        // Wall that grows as the shape flattens, so the walk backs off
        // instead of probing the degenerate boundary.
        const double depth = std::log10(kBarrierGramDet / std::max(gdet, 1e-300));
        return 1e3 * (1.0 + depth);
    }
    try {
        const EganReport rep = egan_report(EuclideanSimplex(vs));
        return rep.slack / (rep.R * rep.R);
    } catch (const Error&) {
        return 1e9;
    }
}

struct Point {
    std::vector<double> x;
    double f;
};

} // namespace

SearchResult extremal_search(const TrialConfig& cfg, std::uint64_t max_iterations) {
    validate_euclidean_config(cfg);
    if (max_iterations == 0) throw InvalidConfig("max_iterations must be at least 1");

    const std::size_t dim = static_cast<std::size_t>(cfg.dim);
    const std::size_t n = dim * (dim + 1); // search-space dimension

    const EuclideanSimplex start = gen_euclidean(cfg, 0);
    std::vector<double> best_x = flatten(start.vertices());
    double best_f = objective(best_x, dim);

    std::vector<double> trace;
    trace.reserve(max_iterations);

    // Nelder-Mead with the textbook coefficients; restarts shrink the
    // initial step around the incumbent when progress stalls.
    const double refl = 1.0, expand = 2.0, contract = 0.5, shrink = 0.5;

    double coord_scale = 0.0;
    for (double v : best_x) coord_scale = std::max(coord_scale, std::abs(v));
    double step = 0.1 * std::max(coord_scale, 1e-3);

    std::uint64_t used = 0;
    while (used < max_iterations) {
        std::vector<Point> simplex;
        simplex.reserve(n + 1);
        simplex.push_back({best_x, best_f});
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> x = best_x;
            x[i] += step;
            simplex.push_back({x, objective(x, dim)});
        }

        std::uint64_t last_gain = used;
        while (used < max_iterations) {
            std::sort(simplex.begin(), simplex.end(),
                      [](const Point& a, const Point& b) { return a.f < b.f; });

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i].x[j];
            for (double& c : centroid) c /= static_cast<double>(n);

            auto blend = [&](double coeff) {
                std::vector<double> x(n);
                const std::vector<double>& worst = simplex[n].x;
                for (std::size_t j = 0; j < n; ++j)
                    x[j] = centroid[j] + coeff * (centroid[j] - worst[j]);
                return x;
            };

            std::vector<double> xr = blend(refl);
            const double fr = objective(xr, dim);
            if (fr < simplex[0].f) {
                std::vector<double> xe = blend(expand);
                const double fe = objective(xe, dim);
                if (fe < fr) simplex[n] = {std::move(xe), fe};
                else simplex[n] = {std::move(xr), fr};
            } else if (fr < simplex[n - 1].f) {
                simplex[n] = {std::move(xr), fr};
            } else {
                const bool outside = fr < simplex[n].f;
                std::vector<double> xc = blend(outside ? contract : -contract);
                const double fc = objective(xc, dim);
                if (fc < std::min(fr, simplex[n].f)) {
                    simplex[n] = {std::move(xc), fc};
                } else {
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t j = 0; j < n; ++j)
                            simplex[i].x[j] =
                                simplex[0].x[j] + shrink * (simplex[i].x[j] - simplex[0].x[j]);
                        simplex[i].f = objective(simplex[i].x, dim);
                    }
                }
            }

            ++used;
            double iter_best = best_f;
            for (const Point& p : simplex) iter_best = std::min(iter_best, p.f);
            if (iter_best < best_f - 1e-15 * (1.0 + std::abs(best_f))) last_gain = used;
            if (iter_best < best_f) {
                best_f = iter_best;
                for (const Point& p : simplex)
                    if (p.f == iter_best) { best_x = p.x; break; }
            }
            trace.push_back(best_f);

            if (used - last_gain > 40) break; // stalled: restart around the incumbent
        }

        step *= 0.3;
        if (step < 1e-12 * std::max(coord_scale, 1e-3)) break;
    }

    return SearchResult{EuclideanSimplex(unflatten(best_x, dim)), best_f, std::move(trace), used};
}

} // namespace egan
