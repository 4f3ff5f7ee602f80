#include "egan/lorentz.hpp"

#include <algorithm>
#include <cmath>

namespace egan {

namespace {

double entry_scale(const Mat2& m) {
    return std::max({std::abs(m.x), std::abs(m.y), std::abs(m.z), std::abs(m.t), 1.0});
}

} // namespace

bool lorentz_admissible(const Mat2& m) {
    return m.x - m.t > std::abs(m.z - m.y) && m.x + m.t > std::abs(m.z + m.y) &&
           m.x * m.t - m.z * m.y > 0.0;
}

LorentzFactors lorentz_svd(const Mat2& m) {
    if (!lorentz_admissible(m))
        throw NotAdmissible("lorentz_svd: matrix fails the admissibility bounds");
    // (a^2 - b^2) as (a-b)(a+b): the differences carry the information when
    // the entries are large and nearly cancelling.
    double sum_minus = (m.x + m.t) - (m.z + m.y);
    double sum_plus = (m.x + m.t) + (m.z + m.y);
    double diff_minus = (m.x - m.t) - (m.z - m.y);
    double diff_plus = (m.x - m.t) + (m.z - m.y);
    double kpl = std::sqrt(sum_minus * sum_plus);
    double kml = std::sqrt(diff_minus * diff_plus);
    if (!(kml > 1e-14 * entry_scale(m)))
        throw NotAdmissible("lorentz_svd: K - L underflows at the admissibility "
                            "boundary");
    double tps = std::asinh((m.z + m.y) / kpl);
    double tms = std::asinh((m.z - m.y) / kml);
    return {(kpl + kml) / 2.0, (kpl - kml) / 2.0, (tps + tms) / 2.0,
            (tps - tms) / 2.0};
}

Mat2 compose_lorentz(const LorentzFactors& f) {
    double cht = std::cosh(f.t), sht = std::sinh(f.t);
    double chs = std::cosh(f.s), shs = std::sinh(f.s);
    return {f.K * cht * chs + f.L * sht * shs,
            f.K * cht * shs + f.L * sht * chs,
            f.K * sht * chs + f.L * cht * shs,
            f.K * sht * shs + f.L * cht * chs};
}

Mat hyperbolic_rotation(double x, std::size_t n) {
    if (n < 2)
        throw DimensionMismatch("hyperbolic_rotation: n must be >= 2");
    Mat r = Mat::identity(n);
    r(0, 0) = r(1, 1) = std::cosh(x);
    r(0, 1) = r(1, 0) = std::sinh(x);
    return r;
}

} // namespace egan
