// Acceptance gate: one line per criterion, PASS/FAIL, exit 0 iff all pass.
//
// Each criterion is a self-contained numerical experiment over the public
// API; bounds are absolute contract values, not tuned to the current
// implementation.

#include "egan/certificate.hpp"
#include "egan/errors.hpp"
#include "egan/generators.hpp"
#include "egan/io.hpp"
#include "egan/limit.hpp"
#include "egan/lorentz.hpp"
#include "egan/rng.hpp"
#include "egan/scan.hpp"
#include "egan/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

using namespace egan;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

EuclideanSimplex triangle_345() {
    return EuclideanSimplex({Vec{0.0, 0.0}, Vec{4.0, 0.0}, Vec{0.0, 3.0}});
}

// 1. Classical triangle identity R^2 - 2 R r - d^2 = 0 on random triangles.
Outcome criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    TrialConfig cfg;
    cfg.dim = 2;
    cfg.seed = 101;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const EganReport rep = egan_report(gen_euclidean(cfg, i));
        worst = std::max(worst, std::abs(rep.slack) / (rep.R * rep.R));
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = worst <= 1e-9 && elapsed < 5.0;
    return {pass, fmt("max |R^2-2Rr-d^2|/R^2 = %.2e over 10^4 triangles, %.1fs", worst, elapsed)};
}

// 2. Falsification scans in dimensions 2..8: no violation anywhere.
Outcome criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t violations = 0;
    std::string mins = "min slack/R^2:";
    for (int dim = 2; dim <= 8; ++dim) {
        TrialConfig cfg;
        cfg.dim = dim;
        cfg.trials = 100000;
        cfg.seed = 202 + static_cast<std::uint64_t>(dim);
        const ScanReport rep = falsify_scan(cfg);
        violations += rep.violations;
        mins += fmt(" d%d=%.1e", dim, rep.min_slack_normalized);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = violations == 0 && elapsed < 120.0;
    return {pass, fmt("%llu violations in 7x10^5 trials, %s, %.1fs",
                      static_cast<unsigned long long>(violations), mins.c_str(), elapsed)};
}

// 3. Equality cases: regular simplices and the 3-4-5 triangle.
Outcome criterion_3() {
    double worst_slack = 0.0, worst_ratio = 0.0;
    for (int dim = 2; dim <= 10; ++dim) {
        const EganReport rep = egan_report(regular_simplex(dim));
        worst_slack = std::max(worst_slack, std::abs(rep.slack));
        worst_ratio = std::max(worst_ratio, std::abs(rep.R / rep.r - dim));
    }
    const EganReport tri = egan_report(triangle_345());
    const bool tri_ok = std::abs(tri.R - 2.5) <= 1e-12 && std::abs(tri.r - 1.0) <= 1e-12 &&
                        std::abs(tri.d_centers * tri.d_centers - 1.25) <= 1e-12;
    const bool pass = worst_slack <= 1e-10 && worst_ratio <= 1e-10 && tri_ok;
    return {pass, fmt("regular dims 2..10: max|slack| = %.2e, max|R/r - n| = %.2e; "
                      "3-4-5: R = %.17g, r = %.17g, d^2 = %.17g",
                      worst_slack, worst_ratio, tri.R, tri.r, tri.d_centers * tri.d_centers)};
}

// 4. Certificate margin on random polar pairs, m = 3..8.
Outcome criterion_4() {
    const auto start = std::chrono::steady_clock::now();
    double min_margin = 1e300, m3_worst = 0.0, worst_agree = 0.0;
    std::uint64_t errors = 0, semispace_bad = 0;
    for (int m = 3; m <= 8; ++m) {
        TrialConfig cfg;
        cfg.dim = m;
        cfg.seed = 404 + static_cast<std::uint64_t>(m);
        for (std::uint64_t i = 0; i < 10000; ++i) {
            try {
                const PolarPair pair = make_polar_pair(gen_spherical(cfg, i));
                const CertificateReport rep = run_certificate(pair);
                min_margin = std::min(min_margin, rep.margin);
                if (m == 3) m3_worst = std::max(m3_worst, std::abs(rep.margin));
                worst_agree = std::max(worst_agree, std::abs(rep.margin - rep.trace_JD));
                if (!rep.semispace_ok) ++semispace_bad;
            } catch (const Error&) {
                ++errors;
            }
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = min_margin >= -1e-9 && m3_worst <= 1e-8 && worst_agree <= 1e-9 &&
                      errors == 0 && semispace_bad == 0;
    return {pass, fmt("6x10^4 pairs: min margin = %.2e, m=3 max|margin| = %.2e, "
                      "max|margin - trace| = %.2e, %llu errors, %.1fs",
                      min_margin, m3_worst, worst_agree,
                      static_cast<unsigned long long>(errors), elapsed)};
}

// 5. Spherical triangle identity sin^2(R-r) - sin^2 r cos^2 R - sin^2 d = 0.
Outcome criterion_5() {
    TrialConfig cfg;
    cfg.dim = 3;
    cfg.seed = 505;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i)
        worst = std::max(worst, std::abs(spherical_euler_residual(gen_spherical(cfg, i))));
    return {worst <= 1e-9, fmt("max residual = %.2e over 10^4 spherical triangles", worst)};
}

// 6. Polar duality: circumscribed cap of s == inscribed cap of polar(s)
//    up to the complementary radius, cross-checked by facet distances.
Outcome criterion_6() {
    double worst_center = 0.0, worst_sum = 0.0, worst_facet = 0.0;
    for (int m = 3; m <= 8; ++m) {
        TrialConfig cfg;
        cfg.dim = m;
        cfg.seed = 606 + static_cast<std::uint64_t>(m);
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const SphericalSimplex s = gen_spherical(cfg, i);
            const SphericalSimplex p = polar_simplex(s);
            const SphericalCap cc = circum_cap(s);
            const SphericalCap ic = inscribed_cap(p);
            worst_center = std::max(worst_center, unit_angle(cc.center, ic.center));
            worst_sum = std::max(worst_sum, std::abs(cc.angular_radius + ic.angular_radius -
                                                     std::numbers::pi / 2));
            // facet i of polar(s) has inward normal s.vertex(i): the angular
            // distance from the inscribed center must equal the radius
            for (int k = 0; k < m; ++k) {
                const double dist =
                    std::asin(clamp_to_unit_interval(dot(ic.center, s.vertex(k))));
                worst_facet = std::max(worst_facet, std::abs(dist - ic.angular_radius));
            }
        }
    }
    const bool pass = worst_center <= 1e-9 && worst_sum <= 1e-9 && worst_facet <= 1e-9;
    return {pass, fmt("6x10^3 pairs: max center gap = %.2e, max|radius sum - pi/2| = %.2e, "
                      "max facet-distance residual = %.2e",
                      worst_center, worst_sum, worst_facet)};
}

// 7. Hyperbolic SVD: round trips, inadmissible rejection, J-orthogonality.
Outcome criterion_7() {
    double worst_rec = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        Rng rng = Rng::stream(707, i);
        LorentzFactors f;
        f.L = 0.2 + 4.8 * rng.uniform01();
        f.K = f.L + 0.1 + 9.9 * rng.uniform01();
        f.t = -3.0 + 6.0 * rng.uniform01();
        f.s = -3.0 + 6.0 * rng.uniform01();
        const Mat2 m = compose_lorentz(f);
        const Mat2 rec = compose_lorentz(lorentz_svd(m));
        const double scale = std::max({1.0, std::abs(m.x), std::abs(m.y), std::abs(m.z),
                                       std::abs(m.t)});
        const double err = std::max({std::abs(rec.x - m.x), std::abs(rec.y - m.y),
                                     std::abs(rec.z - m.z), std::abs(rec.t - m.t)});
        worst_rec = std::max(worst_rec, err / scale);
    }

    bool swap_rejected = false;
    try {
        lorentz_svd(Mat2{0.0, 1.0, 1.0, 0.0});
    } catch (const NotAdmissible&) {
        swap_rejected = true;
    }
    swap_rejected = swap_rejected && !lorentz_admissible(Mat2{0.0, 1.0, 1.0, 0.0});

    double worst_j = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(708, i);
        const double x = -3.0 + 6.0 * rng.uniform01();
        const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
        const Mat r = hyperbolic_rotation(x, n);
        Mat j = Mat::identity(n);
        for (std::size_t k = 1; k < n; ++k) j(k, k) = -1.0;
        const Mat p = mul(mul(r, j), r); // R_x is symmetric: R^T J R = R J R
        double err = 0.0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t bcol = 0; bcol < n; ++bcol)
                err = std::max(err, std::abs(p(a, bcol) - j(a, bcol)));
        worst_j = std::max(worst_j, err);
    }

    const bool pass = worst_rec <= 1e-10 && swap_rejected && worst_j <= 1e-12;
    return {pass, fmt("10^4 round trips: max error = %.2e; swap rejected = %s; "
                      "max|R J R - J| = %.2e",
                      worst_rec, swap_rejected ? "yes" : "no", worst_j)};
}

// 8. Trace identity on live certificate data: diag(K, -L, -1, ...) paired
//    through the polar matrices reproduces its trace.
Outcome criterion_8() {
    double worst = 0.0;
    std::uint64_t errors = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const int m = 3 + static_cast<int>(i % 6);
        TrialConfig cfg;
        cfg.dim = m;
        cfg.seed = 808;
        try {
            const PolarPair pair = make_polar_pair(gen_spherical(cfg, i));
            const CertificateReport rep = run_certificate(pair);
            Vec m_diag(static_cast<std::size_t>(m));
            m_diag[0] = rep.K;
            m_diag[1] = -rep.L;
            for (int k = 2; k < m; ++k) m_diag[static_cast<std::size_t>(k)] = -1.0;
            const double resid = trace_identity_check(pair.u.vertex_matrix(),
                                                      pair.v.vertex_matrix(), m_diag);
            worst = std::max(worst, resid);
        } catch (const Error&) {
            ++errors;
        }
    }
    const bool pass = worst <= 1e-9 && errors == 0;
    return {pass, fmt("max residual = %.2e over 10^3 certificate runs, %llu errors", worst,
                      static_cast<unsigned long long>(errors))};
}

// 9. Large-sphere limit: scaled slack approaches the flat value at rate H^-2.
Outcome criterion_9() {
    std::string detail;
    bool pass = true;
    TrialConfig cfg;
    cfg.dim = 3;
    cfg.seed = 31;
    const std::vector<std::pair<std::string, EuclideanSimplex>> shapes = {
        {"3-4-5", triangle_345()}, {"tetra", gen_euclidean(cfg, 0)}};
    for (const auto& [name, s] : shapes) {
        const ConvergenceTable t =
            convergence_table(s, default_heights(circumsphere(s).radius));
        std::vector<double> errs;
        for (const EmbeddingRow& row : t.rows)
            errs.push_back(std::abs(scaled_slack(row, t.dim) - t.euclid_slack));
        detail += name + " ratios:";
        for (std::size_t k = 0; k + 1 < errs.size(); ++k) {
            const double ratio = errs[k + 1] / errs[k];
            detail += fmt(" %.4f", ratio);
            if (!(ratio >= 0.005 && ratio <= 0.02)) pass = false;
        }
        detail += "  ";
    }
    return {pass, detail};
}

// 10. Extremal search: the slack floor is 0, reached from random starts.
Outcome criterion_10() {
    double worst_best = -1e300, min_best = 1e300;
    bool monotone = true;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        TrialConfig cfg;
        cfg.dim = 3;
        cfg.seed = seed;
        const SearchResult res = extremal_search(cfg, 2000);
        worst_best = std::max(worst_best, res.best_slack);
        min_best = std::min(min_best, res.best_slack);
        for (std::size_t i = 1; i < res.trace.size(); ++i)
            if (res.trace[i] > res.trace[i - 1]) monotone = false;
    }
    const bool pass = worst_best < 1e-6 && min_best >= -1e-6 && monotone;
    return {pass, fmt("10 starts: best slack in [%.2e, %.2e], traces monotone = %s", min_best,
                      worst_best, monotone ? "yes" : "no")};
}

} // namespace

int main() {
    struct Criterion {
        const char* label;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"triangle identity", criterion_1},
        {"falsification scan dims 2-8", criterion_2},
        {"equality cases", criterion_3},
        {"certificate margin m=3-8", criterion_4},
        {"spherical triangle identity", criterion_5},
        {"polar duality", criterion_6},
        {"hyperbolic SVD", criterion_7},
        {"trace identity", criterion_8},
        {"large-sphere limit", criterion_9},
        {"extremal search", criterion_10},
    };

    int failures = 0;
    int index = 1;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d  %-28s  %s  [%.1fs]\n", out.pass ? "PASS" : "FAIL", index, c.label,
                    out.detail.c_str(), elapsed);
        std::fflush(stdout);
        if (!out.pass) ++failures;
        ++index;
    }
    if (failures > 0) std::printf("%d of 10 criteria FAILED\n", failures);
    else std::printf("all 10 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
