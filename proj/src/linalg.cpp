#include "egan/linalg.hpp"

#include "egan/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace egan {

bool within_tol(double value, double scale, double rtol) {
    return std::abs(value) <= std::max(rtol * std::abs(scale), kAbsFloor);
}

Vec& Vec::operator+=(const Vec& o) {
    kern::active_kernels().axpy(1.0, o.data(), data(), dim());
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    kern::active_kernels().axpy(-1.0, o.data(), data(), dim());
    return *this;
}

Vec& Vec::operator*=(double s) {
    for (std::size_t i = 0; i < dim(); ++i)
        c_[i] *= s;
    return *this;
}

bool Vec::all_finite() const {
    for (double x : c_)
        if (!std::isfinite(x))
            return false;
    return true;
}

Vec operator+(Vec a, const Vec& b) {
    a += b;
    return a;
}

Vec operator-(Vec a, const Vec& b) {
    a -= b;
    return a;
}

Vec operator*(double s, Vec a) {
    a *= s;
    return a;
}

double dot(const Vec& a, const Vec& b) {
    return kern::active_kernels().dot(a.data(), b.data(), a.dim());
}

double dot2(const Vec& a, const Vec& b) {
    return kern::active_kernels().dot2(a.data(), b.data(), a.dim());
}

double norm_sq(const Vec& a) {
    return kern::active_kernels().norm_sq(a.data(), a.dim());
}

double norm(const Vec& a) {
    return std::sqrt(norm_sq(a));
}

Vec normalized(const Vec& a) {
    double n = norm(a);
    if (!(n > kAbsFloor))
        throw Degenerate("cannot normalize a near-zero vector");
    Vec out = a;
    out *= 1.0 / n;
    return out;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Mat Mat::diagonal(const Vec& d) {
    Mat m(d.dim(), d.dim());
    for (std::size_t i = 0; i < d.dim(); ++i)
        m(i, i) = d[i];
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty())
        return Mat();
    Mat m(cols[0].dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].dim() != m.rows())
            throw DimensionMismatch("from_columns: ragged column sizes");
        for (std::size_t i = 0; i < m.rows(); ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty())
        return Mat();
    Mat m(rows.size(), rows[0].dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].dim() != m.cols())
            throw DimensionMismatch("from_rows: ragged row sizes");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = (*this)(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::all_finite() const {
    for (double x : a_)
        if (!std::isfinite(x))
            return false;
    return true;
}

Mat mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mul: inner dimensions differ");
    // Row-of-a against column-of-b through the dot kernel; b columns are
    // gathered once into a transposed copy so rows stay contiguous.
    Mat bt = b.transposed();
    Mat c(a.rows(), b.cols());
    const auto& k = kern::active_kernels();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(i, j) = k.dot(a.row_ptr(i), bt.row_ptr(j), a.cols());
    return c;
}

Vec mul(const Mat& a, const Vec& x) {
    if (a.cols() != x.dim())
        throw DimensionMismatch("mul: matrix/vector size mismatch");
    Vec y(a.rows());
    kern::active_kernels().matvec(a.data(), a.rows(), a.cols(), x.data(), y.data());
    return y;
}

double max_abs(const Mat& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j)));
    return m;
}

namespace {

// Partial-pivot LU with the permutation kept as a row map.
struct Lu {
    Mat f;                 // packed L\U factors
    std::vector<int> perm; // row i of U came from input row perm[i]
    int sign = 1;          // permutation parity, for det()
    bool singular = false;
    double max_pivot = 0.0;
    double min_pivot = std::numeric_limits<double>::infinity();
};

Lu factorize(const Mat& a) {
    std::size_t n = a.rows();
    Lu lu;
    lu.f = a;
    lu.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        lu.perm[i] = static_cast<int>(i);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu.f(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::abs(lu.f(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) {
            lu.singular = true;
            lu.min_pivot = 0.0;
            return lu;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(lu.f(k, j), lu.f(piv, j));
            std::swap(lu.perm[k], lu.perm[piv]);
            lu.sign = -lu.sign;
        }
        lu.max_pivot = std::max(lu.max_pivot, best);
        lu.min_pivot = std::min(lu.min_pivot, best);
        double inv = 1.0 / lu.f(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            double m = lu.f(i, k) * inv;
            lu.f(i, k) = m;
            if (m != 0.0)
                kern::active_kernels().axpy(-m, lu.f.row_ptr(k) + k + 1,
                                            lu.f.data() + i * n + k + 1,
                                            n - k - 1);
        }
    }
    return lu;
}

Vec lu_solve_once(const Lu& lu, const Vec& b) {
    std::size_t n = lu.f.rows();
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[lu.perm[i]];
        for (std::size_t j = 0; j < i; ++j)
            s -= lu.f(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= lu.f(i, j) * x[j];
        x[i] = s / lu.f(i, i);
    }
    return x;
}

// Residual r = b - a*x with the subtraction folded into one compensated sum,
// so r keeps relative accuracy even though it is ~eps times smaller than b.
Vec refined_residual(const Mat& a, const Vec& x, const Vec& b) {
    std::size_t n = a.rows();
    std::vector<double> lhs(n + 1), rhs(n + 1);
    for (std::size_t j = 0; j < n; ++j)
        rhs[j] = -x[j];
    rhs[n] = 1.0;
    Vec r(n);
    const auto& k = kern::active_kernels();
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(a.row_ptr(i), a.row_ptr(i) + n, lhs.begin());
        lhs[n] = b[i];
        r[i] = k.dot2(lhs.data(), rhs.data(), n + 1);
    }
    return r;
}

void check_solvable(const Lu& lu) {
    if (lu.singular)
        throw SingularMatrix("exact zero pivot in LU factorization");
    if (lu.min_pivot <= 0.0 || lu.max_pivot / lu.min_pivot > kCondLimit)
        throw SingularMatrix("condition estimate exceeds trust threshold");
}

Vec solve_with(const Lu& lu, const Mat& a, const Vec& b) {
    Vec x = lu_solve_once(lu, b);
    Vec dx = lu_solve_once(lu, refined_residual(a, x, b));
    x += dx;
    return x;
}

} // namespace

Vec solve_linear(const Mat& a, const Vec& b) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("solve_linear: matrix must be square");
    if (a.rows() != b.dim())
        throw DimensionMismatch("solve_linear: rhs size mismatch");
    Lu lu = factorize(a);
    check_solvable(lu);
    return solve_with(lu, a, b);
}

Mat solve_linear(const Mat& a, const Mat& b) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("solve_linear: matrix must be square");
    if (a.rows() != b.rows())
        throw DimensionMismatch("solve_linear: rhs rows mismatch");
    Lu lu = factorize(a);
    check_solvable(lu);
    Mat x(b.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        Vec xj = solve_with(lu, a, b.col(j));
        for (std::size_t i = 0; i < b.rows(); ++i)
            x(i, j) = xj[i];
    }
    return x;
}

Mat inverse(const Mat& a) {
    return solve_linear(a, Mat::identity(a.rows()));
}

double det(const Mat& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("det: matrix must be square");
    if (a.rows() == 0)
        return 1.0;
    Lu lu = factorize(a);
    if (lu.singular)
        return 0.0;
    double d = lu.sign;
    for (std::size_t i = 0; i < a.rows(); ++i)
        d *= lu.f(i, i);
    return d;
}

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

// Cholesky-based sqrt(det) of a symmetric PSD matrix; 0 if a pivot is not
// strictly positive (rank deficiency).
double sqrt_det_psd(Mat g) {
    std::size_t n = g.rows();
    // Pivots below this relative floor are rank deficiency, not signal:
    // exact cancellation rarely survives the l*l products.
    double diag_scale = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        diag_scale = std::max(diag_scale, g(k, k));
    const double floor = 64.0 * 1.1e-16 * diag_scale;
    double p = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        double d = g(k, k);
        for (std::size_t j = 0; j < k; ++j)
            d -= g(k, j) * g(k, j);
        if (!(d > floor))
            return 0.0;
        double l = std::sqrt(d);
        g(k, k) = l;
        p *= l;
        for (std::size_t i = k + 1; i < n; ++i) {
            double s = g(i, k);
            for (std::size_t j = 0; j < k; ++j)
                s -= g(i, j) * g(k, j);
            g(i, k) = s / l;
        }
    }
    return p;
}

Mat edge_gram(std::span<const Vec> vertices) {
    std::size_t k = vertices.size() - 1;
    std::vector<Vec> edges(k);
    for (std::size_t i = 0; i < k; ++i)
        edges[i] = vertices[i + 1] - vertices[0];
    Mat g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            g(i, j) = g(j, i) = dot(edges[i], edges[j]);
    return g;
}

} // namespace

double gram_volume(std::span<const Vec> vertices, int k) {
    if (k < 1 || vertices.size() != static_cast<std::size_t>(k) + 1)
        throw DimensionMismatch("gram_volume: need exactly k+1 vertices");
    for (const Vec& v : vertices)
        if (v.dim() != vertices[0].dim())
            throw DimensionMismatch("gram_volume: mixed vertex dimensions");
    if (vertices[0].dim() < static_cast<std::size_t>(k))
        throw DimensionMismatch("gram_volume: ambient dimension below k");
    return sqrt_det_psd(edge_gram(vertices)) / factorial(k);
}

double cayley_menger_volume(const Mat& sq_dists, int k) {
    std::size_t n = static_cast<std::size_t>(k) + 1;
    if (k < 1 || sq_dists.rows() != n || sq_dists.cols() != n)
        throw DimensionMismatch("cayley_menger_volume: need a (k+1)x(k+1) grid");
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sq_dists(i, i) != 0.0)
            throw InvalidArgument("cayley_menger_volume: nonzero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (sq_dists(i, j) < 0.0 || sq_dists(i, j) != sq_dists(j, i))
                throw InvalidArgument("cayley_menger_volume: grid not a symmetric "
                                      "nonnegative distance matrix");
            scale = std::max(scale, sq_dists(i, j));
        }
    }
    Mat m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        m(0, i + 1) = 1.0;
        m(i + 1, 0) = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            m(i + 1, j + 1) = sq_dists(i, j);
    }
    double denom = std::ldexp(factorial(k) * factorial(k), k); // 2^k (k!)^2
    double sign = (k % 2 == 0) ? -1.0 : 1.0;                   // (-1)^(k+1)
    double vol_sq = sign * det(m) / denom;
    double tol = kDefaultRtol * std::pow(scale, k) / denom + kAbsFloor;
    if (vol_sq < -tol)
        throw InvalidMetric("squared distances admit no Euclidean embedding");
    return std::sqrt(std::max(vol_sq, 0.0));
}

double normalized_gram_det(std::span<const Vec> vertices) {
    if (vertices.size() < 2)
        throw DimensionMismatch("normalized_gram_det: need at least 2 vertices");
    Mat g = edge_gram(vertices);
    std::size_t k = g.rows();
    std::vector<double> inv_norm(k);
    for (std::size_t i = 0; i < k; ++i) {
        double nn = g(i, i);
        if (!(nn > 0.0))
            return 0.0; // coincident vertices
        inv_norm[i] = 1.0 / std::sqrt(nn);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            g(i, j) *= inv_norm[i] * inv_norm[j];
    double s = sqrt_det_psd(g);
    return s * s;
}

double clamp_to_unit_interval(double x) {
    return std::min(1.0, std::max(-1.0, x));
}

double angle_between(const Vec& u, const Vec& v, double rtol) {
    if (u.dim() != v.dim())
        throw DimensionMismatch("angle_between: size mismatch");
    double tol = std::max(rtol, kAbsFloor);
    if (std::abs(norm(u) - 1.0) > tol || std::abs(norm(v) - 1.0) > tol)
        throw NotUnit("angle_between: input vectors must be unit");
    return std::acos(clamp_to_unit_interval(dot(u, v)));
}

double unit_angle(const Vec& u, const Vec& v) {
    return 2.0 * std::atan2(norm(u - v), norm(u + v));
}

Vec project_off(Vec v, std::span<const Vec> onb) {
    for (int pass = 0; pass < 2; ++pass)
        for (const Vec& q : onb)
            v -= dot(q, v) * q;
    return v;
}

std::vector<Vec> orthonormalized(std::span<const Vec> vs, double drop_tol) {
    std::vector<Vec> q;
    for (const Vec& v : vs) {
        Vec r = project_off(v, q);
        double rn = norm(r);
        if (rn > drop_tol * (norm(v) + kAbsFloor))
            q.push_back((1.0 / rn) * r);
    }
    return q;
}

} // namespace egan
