#pragma once

#include "egan/errors.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

// Dense vector/matrix layer for dimensions up to ~17.  Everything is value
// semantics; the element loops route through the kernel dispatch layer.

namespace egan {

// Default relative tolerance for verification checks.
inline constexpr double kDefaultRtol = 1e-9;
// Absolute fallback when the reference scale itself is ~0.
inline constexpr double kAbsFloor = 1e-12;
// Normalized Gram determinant below this means the simplex is degenerate.
inline constexpr double kDegenerateGramDet = 1e-12;
// Band [kDegenerateGramDet, kNearDegenerateGramDet) is accepted but flagged.
inline constexpr double kNearDegenerateGramDet = 1e-9;
// Condition-estimate ceiling for solve_linear.
inline constexpr double kCondLimit = 1e14;

// |value| <= max(rtol*|scale|, kAbsFloor)
bool within_tol(double value, double scale, double rtol = kDefaultRtol);

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : c_(dim, 0.0) {}
    Vec(std::initializer_list<double> xs) : c_(xs) {}
    explicit Vec(std::vector<double> xs) : c_(std::move(xs)) {}

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    const double* data() const { return c_.data(); }
    double* data() { return c_.data(); }
    const std::vector<double>& coords() const { return c_; }

    auto begin() { return c_.begin(); }
    auto end() { return c_.end(); }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(double s);

    bool all_finite() const;

private:
    std::vector<double> c_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(double s, Vec a);

double dot(const Vec& a, const Vec& b);
// Compensated dot; error ~1 ulp of the exact value regardless of cancellation.
double dot2(const Vec& a, const Vec& b);
double norm_sq(const Vec& a);
double norm(const Vec& a);
Vec normalized(const Vec& a); // throws Degenerate on ~zero input

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static Mat identity(std::size_t n);
    static Mat diagonal(const Vec& d);
    static Mat from_columns(const std::vector<Vec>& cols);
    static Mat from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const double* data() const { return a_.data(); }
    double* data() { return a_.data(); }
    const double* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Mat transposed() const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

Mat mul(const Mat& a, const Mat& b);
Vec mul(const Mat& a, const Vec& x);
double max_abs(const Mat& a);

// Solve a*x = b by partial-pivot LU plus one compensated-residual refinement
// step.  Throws SingularMatrix on pivot breakdown or when the pivot-ratio
// condition estimate exceeds kCondLimit; DimensionMismatch on bad shapes.
Vec solve_linear(const Mat& a, const Vec& b);
// Column-wise multi-RHS variant sharing one factorization.
Mat solve_linear(const Mat& a, const Mat& b);
Mat inverse(const Mat& a);
// Signed determinant via the same LU (0.0 on pivot breakdown).
double det(const Mat& a);

// k-volume of the simplex spanned by k+1 vertices, via the Gram determinant
// of the edge vectors.  Returns 0 for affinely dependent vertices.
double gram_volume(std::span<const Vec> vertices, int k);

// Same volume from squared pairwise distances (Cayley-Menger determinant).
// sq_dists is the (k+1)x(k+1) symmetric matrix with zero diagonal.  Throws
// InvalidMetric when the determinant sign contradicts a Euclidean embedding.
double cayley_menger_volume(const Mat& sq_dists, int k);

// Scale-free degeneracy measure: det(Gram of edges) normalized by the product
// of squared edge norms; lies in [0, 1], 0 for flat simplices.
double normalized_gram_det(std::span<const Vec> vertices);

// Angle between unit vectors via arccos of the clamped dot product.
// Throws NotUnit if a norm deviates from 1 beyond rtol, DimensionMismatch on
// size mismatch.
double angle_between(const Vec& u, const Vec& v, double rtol = kDefaultRtol);

// Angle between unit vectors via 2*atan2(|u-v|, |u+v|): no precision loss for
// tiny angles or angles near pi.  Inputs are trusted to be unit.
double unit_angle(const Vec& u, const Vec& v);

double clamp_to_unit_interval(double x); // clamp to [-1, 1]

// v minus its projection onto the span of an orthonormal family, applied
// twice so the residual is orthogonal to working precision.
Vec project_off(Vec v, std::span<const Vec> onb);

// Modified Gram-Schmidt with reorthogonalization.  Vectors whose residual
// norm falls below drop_tol (relative to the input norm) are dropped.
std::vector<Vec> orthonormalized(std::span<const Vec> vs, double drop_tol = 1e-10);

} // namespace egan
