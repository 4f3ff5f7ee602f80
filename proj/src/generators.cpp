#include "egan/generators.hpp"

#include "egan/errors.hpp"
#include "egan/rng.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace egan {

namespace {

constexpr int kMaxAttempts = 100;
constexpr double kMinEuclidDim = 2;
constexpr double kMaxDim = 16;

Vec gaussian_vec(Rng& rng, std::size_t n) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.gaussian();
    return v;
}

std::vector<Vec> gaussian_vertices(Rng& rng, std::size_t count, std::size_t dim) {
    std::vector<Vec> vs;
    vs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) vs.push_back(gaussian_vec(rng, dim));
    return vs;
}

double loguniform(Rng& rng, double lo, double hi) {
    return std::exp(std::log(lo) + rng.uniform01() * (std::log(hi) - std::log(lo)));
}

// Move the last vertex toward the affine hull of the others until the
// normalized Gram determinant lands in [lo, hi].  The determinant scales
// like lambda^2 in the remaining offset, so a multiplicative update
// converges in a handful of steps.  Returns false when it cannot land.
bool flatten_euclidean(std::vector<Vec>& vs, double target, double lo, double hi) {
    const std::size_t last = vs.size() - 1;
    std::vector<Vec> edges;
    edges.reserve(last - 1);
    for (std::size_t i = 1; i < last; ++i) {
        Vec e = vs[i];
        e -= vs[0];
        edges.push_back(std::move(e));
    }
    const std::vector<Vec> basis = orthonormalized(edges);
    if (basis.size() != edges.size()) return false;

    Vec offset = vs[last];
    offset -= vs[0];
    const Vec residual = project_off(offset, basis);

    const Vec original = vs[last];
    auto place = [&](double lambda) {
        Vec v = original;
        for (std::size_t j = 0; j < v.dim(); ++j) v[j] -= (1.0 - lambda) * residual[j];
        vs[last] = std::move(v);
        return normalized_gram_det(vs);
    };

    double nd1 = normalized_gram_det(vs);
    if (nd1 <= 0) return false;
    double lambda = std::sqrt(target / nd1);
    for (int step = 0; step < 40; ++step) {
        if (!(lambda > 0) || lambda > 1.0) return false;
        const double nd = place(lambda);
        if (nd >= lo && nd <= hi) return true;
        if (nd <= 0) return false;
        lambda *= std::sqrt(target / nd);
    }
    return false;
}

// Rotate the last vertex toward the span of the others so it sits at angle
// theta above that span.  Writing the vertex as p cos(theta) + r sin(theta)
// with p in the span and r the unit residual, the determinant of the vertex
// matrix is exactly sin(theta) * det([others, r]), so the flatness is
// controlled in one shot.  Thinning a single direction degrades the polar
// determinant as gently as the geometry allows (~ theta^(m-1)).
bool flatten_spherical(std::vector<Vec>& us, double sin_theta) {
    const std::size_t last = us.size() - 1;
    const std::vector<Vec> span(us.begin(), us.begin() + last);
    const std::vector<Vec> basis = orthonormalized(span);
    if (basis.size() != span.size()) return false;

    const Vec residual = project_off(us[last], basis);
    const double res_norm = norm(residual);
    if (!(res_norm > 1e-8)) return false;
    Vec in_span = us[last];
    for (std::size_t j = 0; j < in_span.dim(); ++j) in_span[j] -= residual[j];
    const double span_norm = norm(in_span);
    if (!(span_norm > 1e-8)) return false; // orthogonal vertex: nothing to slide along

    const Vec r_hat = (1.0 / res_norm) * residual;
    const Vec p_hat = (1.0 / span_norm) * in_span;

    if (!(sin_theta > 0.0) || sin_theta >= res_norm) return false; // would fatten, not flatten
    Vec v = std::sqrt(1.0 - sin_theta * sin_theta) * p_hat;
    Vec tilt = sin_theta * r_hat;
    v += tilt;
    us[last] = normalized(v);
    return true;
}

// The polar must be constructible and itself acceptably fat; certificate
// and duality runs use both halves of the pair.
bool polar_ok(const SphericalSimplex& s, double det_floor) {
    try {
        const SphericalSimplex p = polar_simplex(s);
        return std::abs(det(p.vertex_matrix())) >= det_floor;
    } catch (const Error&) {
        return false;
    }
}

// beta + gamma - alpha - pi/2 for (s, polar(s)): the pair is admissible when
// this is positive, and certificate rounding error grows like 1/margin.
bool angle_margin_ok(const SphericalSimplex& s, double floor) {
    try {
        const SphericalCap cb = circum_cap(s);
        const SphericalCap cg = circum_cap(polar_simplex(s));
        const double alpha = unit_angle(cb.center, cg.center);
        const double margin =
            cb.angular_radius + cg.angular_radius - alpha - std::numbers::pi / 2;
        return margin >= floor;
    } catch (const Error&) {
        return false;
    }
}

[[noreturn]] void exhausted(const char* what) {
    throw GenerationExhausted(std::string("generator failed to produce an acceptable ") +
                              what + " after 100 attempts");
}

} // namespace

GeneratorKind parse_generator(std::string_view name) {
    if (name == "gaussian") return GeneratorKind::gaussian;
    if (name == "near-degenerate" || name == "near_degenerate") return GeneratorKind::near_degenerate;
    if (name == "regular-perturbed" || name == "regular_perturbed") return GeneratorKind::regular_perturbed;
    throw InvalidConfig("unknown generator: " + std::string(name));
}

std::string generator_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::gaussian: return "gaussian";
        case GeneratorKind::near_degenerate: return "near-degenerate";
        case GeneratorKind::regular_perturbed: return "regular-perturbed";
    }
    throw InvalidConfig("unknown generator kind");
}

std::pair<double, double> spherical_thin_angle_band(int m) {
    const double lo =
        std::pow(kSphericalThinPolarFloor, 1.0 / static_cast<double>(m - 1));
    return {lo, std::min(10.0 * lo, 0.1)};
}

namespace {

void validate_common(const TrialConfig& cfg) {
    if (cfg.trials == 0) throw InvalidConfig("trials must be at least 1");
    if (!(cfg.rtol > 0)) throw InvalidConfig("rtol must be positive");
    if (!(cfg.perturbation >= 0)) throw InvalidConfig("perturbation must be nonnegative");
}

} // namespace

void validate_euclidean_config(const TrialConfig& cfg) {
    validate_common(cfg);
    if (cfg.dim < kMinEuclidDim || cfg.dim > kMaxDim)
        throw InvalidConfig("euclidean dimension must lie in [2, 16], got " + std::to_string(cfg.dim));
}

void validate_spherical_config(const TrialConfig& cfg) {
    validate_common(cfg);
    if (cfg.dim < 3 || cfg.dim > kMaxDim)
        throw InvalidConfig("spherical ambient dimension must lie in [3, 16], got " +
                            std::to_string(cfg.dim));
}

EuclideanSimplex gen_euclidean(const TrialConfig& cfg, std::uint64_t index) {
    validate_euclidean_config(cfg);
    const std::size_t d = static_cast<std::size_t>(cfg.dim);
    Rng rng = Rng::stream(cfg.seed, index);

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Vec> vs;
        switch (cfg.generator) {
            case GeneratorKind::gaussian: {
                vs = gaussian_vertices(rng, d + 1, d);
                if (normalized_gram_det(vs) < kDegenerateGramDet) continue;
                break;
            }
            case GeneratorKind::near_degenerate: {
                vs = gaussian_vertices(rng, d + 1, d);
                if (normalized_gram_det(vs) < 1e-6) continue; // want a clearly fat base shape
                const double target = loguniform(rng, kNearDegenerateLow, kNearDegenerateHigh);
                if (!flatten_euclidean(vs, target, kNearDegenerateLow * 0.1, kNearDegenerateHigh * 10))
                    continue;
                break;
            }
            case GeneratorKind::regular_perturbed: {
                const EuclideanSimplex reg = regular_simplex(cfg.dim);
                if (cfg.perturbation == 0) return reg;
                vs = reg.vertices();
                for (auto& v : vs)
                    for (auto& x : v) x += cfg.perturbation * rng.gaussian();
                if (normalized_gram_det(vs) < kDegenerateGramDet) continue;
                break;
            }
        }
        return EuclideanSimplex(std::move(vs));
    }
    exhausted("euclidean simplex");
}

SphericalSimplex gen_spherical(const TrialConfig& cfg, std::uint64_t index) {
    validate_spherical_config(cfg);
    const std::size_t m = static_cast<std::size_t>(cfg.dim);
    Rng rng = Rng::stream(cfg.seed, index);

    auto normalize_all = [](std::vector<Vec>& us) {
        for (auto& u : us) {
            const double n = std::sqrt(dot(u, u));
            if (!(n > 1e-6)) return false;
            u *= 1.0 / n;
        }
        return true;
    };

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Vec> us;
        switch (cfg.generator) {
            case GeneratorKind::gaussian: {
                us = gaussian_vertices(rng, m, m);
                if (!normalize_all(us)) continue;
                if (std::abs(det(Mat::from_columns(us))) < kSphericalDetFloor) continue;
                SphericalSimplex s(std::move(us));
                if (!polar_ok(s, kSphericalPolarDetFloor)) continue;
                if (!angle_margin_ok(s, kSphericalAngleFloor)) continue;
                return s;
            }
            case GeneratorKind::near_degenerate: {
                us = gaussian_vertices(rng, m, m);
                if (!normalize_all(us)) continue;
                if (std::abs(det(Mat::from_columns(us))) < 1e-2) continue;
                const auto band = spherical_thin_angle_band(static_cast<int>(m));
                const double sin_theta = loguniform(rng, band.first, band.second);
                if (!flatten_spherical(us, sin_theta)) continue;
                SphericalSimplex s(std::move(us));
                if (!polar_ok(s, kSphericalThinPolarFloor)) continue;
                return s;
            }
            case GeneratorKind::regular_perturbed: {
                const SphericalSimplex reg = identity_simplex(static_cast<int>(m));
                if (cfg.perturbation == 0) return reg;
                us = reg.vertices();
                for (auto& u : us)
                    for (auto& x : u) x += cfg.perturbation * rng.gaussian();
                if (!normalize_all(us)) continue;
                if (std::abs(det(Mat::from_columns(us))) < kDegenerateGramDet) continue;
                SphericalSimplex s(std::move(us));
                if (!polar_ok(s, kDegenerateGramDet)) continue;
                return s;
            }
        }
    }
    exhausted("spherical simplex");
}

} // namespace egan
