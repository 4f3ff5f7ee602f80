#include "egan/certificate.hpp"

#include "egan/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace egan {

namespace {

struct AlignedFull {
    AlignedPair pair;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

AlignedFull align_full(const PolarPair& p) {
    PolarityResult polarity = verify_polarity(p.u, p.v);
    if (!polarity.ok)
        throw Degenerate("align_pair: simplices are not a polar pair");
    std::size_t m = static_cast<std::size_t>(p.u.m());

    SphericalCap cap_u = circum_cap(p.u);
    SphericalCap cap_v = circum_cap(p.v);
    double alpha = unit_angle(cap_u.center, cap_v.center);

    std::vector<Vec> seed;
    seed.push_back(cap_u.center);
    Vec e2_raw = project_off(cap_v.center, std::span<const Vec>(seed));
    if (norm(e2_raw) > 1e-9) {
        seed.push_back(normalized(e2_raw));
    } else {
        // coincident centers (alpha ~ 0): any direction orthogonal to e1 works
        for (std::size_t j = 0; j < m; ++j) {
            Vec cj(m);
            cj[j] = 1.0;
            Vec r = project_off(cj, std::span<const Vec>(seed));
            if (norm(r) > 0.1) {
                seed.push_back(normalized(r));
                break;
            }
        }
    }
    for (std::size_t j = 0; j < m && seed.size() < m; ++j) {
        Vec cj(m);
        cj[j] = 1.0;
        Vec r = project_off(cj, std::span<const Vec>(seed));
        if (norm(r) > 0.1)
            seed.push_back(normalized(r));
    }
    if (seed.size() != m)
        throw Degenerate("align_pair: failed to complete an orthonormal basis");

    Mat givens = Mat::identity(m);
    givens(0, 0) = std::cos(alpha);
    givens(0, 1) = std::sin(alpha);
    givens(1, 0) = -std::sin(alpha);
    givens(1, 1) = std::cos(alpha);

    // row k of `coords` maps ambient vectors onto basis vector k
    Mat coords = Mat::from_rows(seed);
    Mat umat = mul(coords, p.u.vertex_matrix());
    // v lives in the rotated basis whose first vector is cap_v.center
    Mat vmat = mul(givens, mul(coords, p.v.vertex_matrix()));

    return {{std::move(seed), std::move(umat), std::move(vmat), std::move(givens)},
            alpha, cap_u.angular_radius, cap_v.angular_radius};
}

// Scales row `row` of a copy of m by factor.
Mat with_scaled_row(Mat m, std::size_t row, double factor) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(row, j) *= factor;
    return m;
}

// x^T diag(d) x for every column pair: returns diag entries of m^T diag(d) m.
std::vector<double> weighted_column_norms(const Mat& m, const Vec& d) {
    std::vector<double> out(m.cols(), 0.0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            out[j] += d[i] * m(i, j) * m(i, j);
    return out;
}

} // namespace

AlignedPair align_pair(const PolarPair& p) {
    return align_full(p).pair;
}

double direct_margin(double alpha, double beta, double gamma, int m) {
    double b = std::tan(beta);
    double c = std::tan(gamma);
    double ca = std::cos(alpha);
    double sa = std::sin(alpha);
    double lo = (b * c - 1.0) * ca - (b + c) * sa;
    double hi = (b * c - 1.0) * ca + (b + c) * sa;
    double radicand = lo * hi;
    if (radicand < 0.0) {
        if (radicand < -1e-12 * std::max(1.0, hi * hi))
            throw Degenerate("direct_margin: negative radicand beyond roundoff");
        radicand = 0.0;
    }
    return std::sqrt(radicand) - static_cast<double>(m - 2);
}

CertificateReport run_certificate(const PolarPair& p, double rtol) {
    AlignedFull af = align_full(p);
    std::size_t m = static_cast<std::size_t>(p.u.m());
    double b = std::tan(af.beta);
    double c = std::tan(af.gamma);

    if (!(af.beta + af.gamma > af.alpha + std::numbers::pi / 2))
        throw Degenerate("run_certificate: circumradii too small for the "
                         "center distance (angle bound violated)");

    // Evaluation-noise bound for the margin.  The two radicand factors are
    // sums of products of magnitude up to b*c, so each carries absolute
    // rounding error ~ eps * (b*c + b + c); the square root turns that into
    // error ~ eps * (b*c + b + c)^2 / sqrt(radicand).  Thin pairs make b*c
    // huge and the bound grows accordingly; treating the inputs as exact is
    // deliberate (the certificate judges the pair it was given).
    const double noise_term = b * c + b + c + 1.0;
    const double lo_bound = (b * c - 1.0) * std::cos(af.alpha) -
                            (b + c) * std::sin(af.alpha);
    const double hi_bound = (b * c - 1.0) * std::cos(af.alpha) +
                            (b + c) * std::sin(af.alpha);
    const double root_floor =
        std::max(std::sqrt(std::max(lo_bound * hi_bound, 0.0)),
                 static_cast<double>(m - 2));
    const double margin_noise = 64.0 * std::numeric_limits<double>::epsilon() *
                                noise_term * noise_term / root_floor;
    const double margin_tol = std::max(rtol, margin_noise);

    Mat2 core{b * c * std::cos(af.alpha), c * std::sin(af.alpha),
              -b * std::sin(af.alpha), std::cos(af.alpha)};
    LorentzFactors lf;
    try {
        lf = lorentz_svd(core);
    } catch (const NotAdmissible&) {
        throw Degenerate("run_certificate: core matrix at the admissibility "
                         "boundary");
    }

    // U' = sqrt(D)^-1 R_(-s) B U, V' = sqrt(D)^-1 R_(-t) C V
    Mat uprime = mul(hyperbolic_rotation(-lf.s, m), with_scaled_row(af.pair.Umat, 0, b));
    Mat vprime = mul(hyperbolic_rotation(-lf.t, m), with_scaled_row(af.pair.Vmat, 0, c));
    uprime = with_scaled_row(with_scaled_row(uprime, 0, 1.0 / std::sqrt(lf.K)),
                             1, 1.0 / std::sqrt(lf.L));
    vprime = with_scaled_row(with_scaled_row(vprime, 0, 1.0 / std::sqrt(lf.K)),
                             1, 1.0 / std::sqrt(lf.L));

    CertificateReport rep;
    rep.m = static_cast<int>(m);
    rep.alpha = af.alpha;
    rep.beta = af.beta;
    rep.gamma = af.gamma;
    rep.b = b;
    rep.c = c;
    rep.K = lf.K;
    rep.L = lf.L;
    rep.margin = direct_margin(af.alpha, af.beta, af.gamma, static_cast<int>(m));
    rep.trace_JD = lf.K - lf.L - static_cast<double>(m - 2);

    // (i) transformed pair is still polar: U'^T V' diagonal, positive
    Mat pairing = mul(uprime.transposed(), vprime);
    double pairing_scale = std::max(1.0, max_abs(pairing));
    double min_diag = pairing(0, 0);
    for (std::size_t i = 0; i < m; ++i) {
        min_diag = std::min(min_diag, pairing(i, i));
        for (std::size_t j = 0; j < m; ++j)
            if (i != j)
                rep.max_offdiag_UtV =
                    std::max(rep.max_offdiag_UtV, std::abs(pairing(i, j)));
    }

    // (ii) columns are isotropic for the form J D = diag(K, -L, -1, ..., -1)
    Vec jd(m);
    jd[0] = lf.K;
    jd[1] = -lf.L;
    for (std::size_t i = 2; i < m; ++i)
        jd[i] = -1.0;
    double jd_scale = std::max(1.0, std::max(lf.K, lf.L));
    for (double q : weighted_column_norms(uprime, jd))
        rep.max_diag_JB2U = std::max(rep.max_diag_JB2U, std::abs(q));
    for (double q : weighted_column_norms(vprime, jd))
        rep.max_diag_JC2V = std::max(rep.max_diag_JC2V, std::abs(q));

    // (iii) every transformed vertex stays in the positive semi-space
    double min_top = uprime(0, 0);
    for (std::size_t j = 0; j < m; ++j)
        min_top = std::min({min_top, uprime(0, j), vprime(0, j)});
    rep.semispace_ok = min_top > 0.0;

    std::ostringstream why;
    if (rep.max_offdiag_UtV > rtol * pairing_scale)
        why << "transformed pair lost polarity (off-diagonal "
            << rep.max_offdiag_UtV << "); ";
    if (!(min_diag > 0.0))
        why << "transformed pairing has a nonpositive diagonal entry; ";
    if (rep.max_diag_JB2U > rtol * jd_scale || rep.max_diag_JC2V > rtol * jd_scale)
        why << "columns are not isotropic for the signature form; ";
    if (!rep.semispace_ok)
        why << "a transformed vertex left the positive semi-space; ";
    if (rep.margin < -margin_tol)
        why << "margin " << rep.margin << " below the rounding tolerance "
            << -margin_tol << "; ";
    if (std::abs(rep.margin - rep.trace_JD) >
        std::max(margin_tol, rtol * std::max(1.0, std::abs(rep.margin))))
        why << "margin and trace disagree; ";
    if (!why.str().empty())
        throw CertificateViolation("run_certificate: " + why.str());
    return rep;
}

double trace_identity_check(const Mat& u, const Mat& v, const Vec& m_diag) {
    std::size_t m = u.rows();
    if (u.cols() != m || v.rows() != m || v.cols() != m || m_diag.dim() != m)
        throw DimensionMismatch("trace_identity_check: need two m x m matrices "
                                "and m diagonal entries");
    if (m < 2 || !(m_diag[0] > 0.0))
        throw InvalidArgument("trace_identity_check: m_diag[0] must be positive");
    for (std::size_t i = 1; i < m; ++i)
        if (!(m_diag[i] < 0.0))
            throw InvalidArgument("trace_identity_check: m_diag[1..] must be negative");

    double trace = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        trace += m_diag[i];

    auto form = [&](const Vec& a, const Vec& b) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            s += m_diag[k] * a[k] * b[k];
        return s;
    };
    auto form_scale = [&](const Vec& a, const Vec& b) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            s += std::abs(m_diag[k] * a[k] * b[k]);
        return s;
    };

    double paired_sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        Vec ui = u.col(i);
        Vec vi = v.col(i);
        double uv = dot(ui, vi);
        if (!(uv > 0.0))
            throw NotPolar("trace_identity_check: U^T V diagonal not positive");
        double muv = form(ui, vi);
        bool isotropic = std::abs(form(ui, ui)) <= 1e-9 * form_scale(ui, ui) &&
                         std::abs(form(vi, vi)) <= 1e-9 * form_scale(vi, vi);
        if (isotropic && muv < -1e-9 * form_scale(ui, vi))
            throw CertificateViolation("trace_identity_check: negative pairing "
                                       "of isotropic columns");
        paired_sum += muv / uv;
    }
    return std::abs(trace - paired_sum);
}

double angle_lemma_margin(const PolarPair& p) {
    PolarityResult polarity = verify_polarity(p.u, p.v);
    if (!polarity.ok)
        throw Degenerate("angle_lemma_margin: simplices are not a polar pair");
    SphericalCap cap_u = circum_cap(p.u);
    SphericalCap cap_v = circum_cap(p.v);
    double alpha = unit_angle(cap_u.center, cap_v.center);
    return cap_u.angular_radius + cap_v.angular_radius - alpha -
           std::numbers::pi / 2;
}

double spherical_gd_slack(const SphericalSimplex& s) {
    double n = static_cast<double>(s.m() - 1);
    SphericalCap circ = circum_cap(s);
    SphericalCap insc = inscribed_cap(s);
    double big_r = std::tan(circ.angular_radius);
    double small_r = std::tan(insc.angular_radius);
    double d = std::tan(unit_angle(circ.center, insc.center));
    return (big_r - n * small_r) * (big_r + (n - 2.0) * small_r) - d * d;
}

double spherical_euler_residual(const SphericalSimplex& s) {
    if (s.m() != 3)
        throw DimensionMismatch("spherical_euler_residual: needs a spherical "
                                "triangle (m = 3)");
    SphericalCap circ = circum_cap(s);
    SphericalCap insc = inscribed_cap(s);
    double big_r = circ.angular_radius;
    double small_r = insc.angular_radius;
    double d = unit_angle(circ.center, insc.center);
    double sr = std::sin(big_r - small_r);
    double sir = std::sin(small_r);
    double cr = std::cos(big_r);
    double sd = std::sin(d);
    return sr * sr - sir * sir * cr * cr - sd * sd;
}

} // namespace egan
