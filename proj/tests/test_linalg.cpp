#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "egan/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

using namespace egan;

namespace {

std::uint64_t mix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform_pm1(std::uint64_t& s) {
    return 2.0 * (static_cast<double>(mix(s) >> 11) * 0x1.0p-53) - 1.0;
}

Vec random_vec(std::uint64_t& s, std::size_t n, double scale = 1.0) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = scale * uniform_pm1(s);
    return v;
}

Mat random_mat(std::uint64_t& s, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = uniform_pm1(s);
    return m;
}

Vec random_unit(std::uint64_t& s, std::size_t n) {
    while (true) {
        Vec v = random_vec(s, n);
        if (norm(v) > 0.1)
            return normalized(v);
    }
}

Mat pairwise_sq_dists(const std::vector<Vec>& pts) {
    Mat d(pts.size(), pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            d(i, j) = norm_sq(pts[i] - pts[j]);
    return d;
}

} // namespace

TEST_CASE("vector algebra basics") {
    Vec a{1.0, 2.0, 3.0};
    Vec b{4.0, 5.0, 6.0};
    CHECK(dot(a, b) == doctest::Approx(32.0));
    CHECK(norm_sq(a) == doctest::Approx(14.0));
    Vec c = a + b;
    CHECK(c[0] == 5.0);
    c -= b;
    CHECK(c[2] == doctest::Approx(3.0));
    Vec u = normalized(Vec{3.0, 4.0});
    CHECK(u[0] == doctest::Approx(0.6));
    CHECK_THROWS_AS(normalized(Vec{0.0, 0.0}), Degenerate);
}

TEST_CASE("matrix product and transpose") {
    Mat a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 3;
    a(1, 1) = 4;
    Mat b = Mat::identity(2);
    Mat c = mul(a, b);
    CHECK(c(1, 0) == 3.0);
    Mat at = a.transposed();
    CHECK(at(0, 1) == 3.0);
    Vec y = mul(a, Vec{1.0, 1.0});
    CHECK(y[0] == doctest::Approx(3.0));
    CHECK(y[1] == doctest::Approx(7.0));
    CHECK_THROWS_AS(mul(a, Vec{1.0, 1.0, 1.0}), DimensionMismatch);
}

TEST_CASE("solve_linear: residual stays below tolerance on random systems") {
    std::uint64_t s = 42;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 2 + mix(s) % 12;
        Mat a = random_mat(s, n);
        Vec b = random_vec(s, n, 2.0);
        Vec x;
        try {
            x = solve_linear(a, b);
        } catch (const SingularMatrix&) {
            continue; // rare random near-singularity, legitimately rejected
        }
        Vec r = mul(a, x) - b;
        CHECK(norm(r) <= kDefaultRtol * (norm(b) + kAbsFloor));
    }
}

TEST_CASE("solve_linear: refinement drives the residual to machine level") {
    // Geometric diagonal gives condition ~1e8; the compensated refinement
    // step must still deliver a residual at the eps scale of |A||x|.
    std::uint64_t s = 7;
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 8;
        Mat a = random_mat(s, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) *= std::pow(10.0, -static_cast<double>(j)); // col scaling
        Vec b = random_vec(s, n);
        Vec x = solve_linear(a, b);
        Vec r = mul(a, x) - b;
        CHECK(norm(r) <= 1e-12 * (norm(b) + 1.0));
    }
}

TEST_CASE("solve_linear rejects singular and near-singular input") {
    Mat a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 2.0;
    a(1, 0) = 2.0;
    a(1, 1) = 4.0; // exactly dependent rows
    CHECK_THROWS_AS(solve_linear(a, Vec{1.0, 1.0}), SingularMatrix);

    Mat b(2, 2);
    b(0, 0) = 1.0;
    b(0, 1) = 1.0;
    b(1, 0) = 1.0;
    b(1, 1) = 1.0 + 1e-16; // dependent to machine precision
    CHECK_THROWS_AS(solve_linear(b, Vec{1.0, 1.0}), SingularMatrix);

    CHECK_THROWS_AS(solve_linear(Mat(2, 3), Vec{1.0, 1.0}), DimensionMismatch);
}

TEST_CASE("determinant and inverse") {
    Mat a(2, 2);
    a(0, 0) = 3.0;
    a(0, 1) = 1.0;
    a(1, 0) = 2.0;
    a(1, 1) = 5.0;
    CHECK(det(a) == doctest::Approx(13.0));
    Mat ai = inverse(a);
    Mat id = mul(a, ai);
    CHECK(id(0, 0) == doctest::Approx(1.0));
    CHECK(id(0, 1) == doctest::Approx(0.0).epsilon(1e-12));

    std::uint64_t s = 99;
    Mat r = random_mat(s, 6);
    CHECK(det(r) == doctest::Approx(det(r.transposed())).epsilon(1e-9));
}

TEST_CASE("gram_volume: frozen values") {
    std::vector<Vec> tri = {Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{0.0, 1.0}};
    CHECK(gram_volume(tri, 2) == doctest::Approx(0.5).epsilon(1e-14));

    std::vector<Vec> seg = {Vec{1.0, 1.0}, Vec{4.0, 5.0}};
    CHECK(gram_volume(seg, 1) == doctest::Approx(5.0).epsilon(1e-14));

    // collinear points: volume collapses to zero
    std::vector<Vec> flat = {Vec{0.0, 0.0}, Vec{1.0, 1.0}, Vec{2.0, 2.0}};
    CHECK(gram_volume(flat, 2) == 0.0);

    CHECK_THROWS_AS(gram_volume(tri, 3), DimensionMismatch);
}

TEST_CASE("cayley_menger_volume: frozen values and metric rejection") {
    // 3-4-5 right triangle has area 6
    Mat d(3, 3);
    d(0, 1) = d(1, 0) = 9.0;
    d(0, 2) = d(2, 0) = 25.0;
    d(1, 2) = d(2, 1) = 16.0;
    CHECK(cayley_menger_volume(d, 2) == doctest::Approx(6.0).epsilon(1e-13));

    // squared distances (1, 1, 9) violate the triangle inequality
    Mat bad(3, 3);
    bad(0, 1) = bad(1, 0) = 1.0;
    bad(0, 2) = bad(2, 0) = 9.0;
    bad(1, 2) = bad(2, 1) = 1.0;
    CHECK_THROWS_AS(cayley_menger_volume(bad, 2), InvalidMetric);

    Mat asym(3, 3);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(cayley_menger_volume(asym, 2), InvalidArgument);
}

TEST_CASE("gram and Cayley-Menger volumes agree on random simplices") {
    std::uint64_t s = 31337;
    for (int k = 2; k <= 6; ++k) {
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t dim = static_cast<std::size_t>(k) + mix(s) % 3;
            std::vector<Vec> pts;
            for (int i = 0; i <= k; ++i)
                pts.push_back(random_vec(s, dim, 2.0));
            double vg = gram_volume(pts, k);
            double vc = cayley_menger_volume(pairwise_sq_dists(pts), k);
            CHECK(std::abs(vg - vc) <= 1e-9 * (vg + 1e-12));
        }
    }
}

TEST_CASE("normalized_gram_det: scale invariant, 1 for orthogonal edges") {
    std::vector<Vec> right = {Vec{0.0, 0.0}, Vec{2.0, 0.0}, Vec{0.0, 3.0}};
    CHECK(normalized_gram_det(right) == doctest::Approx(1.0).epsilon(1e-14));

    std::uint64_t s = 5;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec> pts;
        for (int i = 0; i < 4; ++i)
            pts.push_back(random_vec(s, 3, 1.5));
        double g1 = normalized_gram_det(pts);
        std::vector<Vec> scaled;
        for (const Vec& p : pts)
            scaled.push_back(37.5 * p);
        double g2 = normalized_gram_det(scaled);
        CHECK(g1 == doctest::Approx(g2).epsilon(1e-10));
        CHECK(g1 >= 0.0);
        CHECK(g1 <= 1.0 + 1e-12);
    }
}

TEST_CASE("angle_between: frozen values and unit enforcement") {
    Vec e1{1.0, 0.0, 0.0};
    Vec e2{0.0, 1.0, 0.0};
    CHECK(angle_between(e1, e2) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
    CHECK(angle_between(e1, e1) == 0.0);
    Vec anti{-1.0, 0.0, 0.0};
    CHECK(angle_between(e1, anti) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK_THROWS_AS(angle_between(Vec{2.0, 0.0, 0.0}, e2), NotUnit);
    CHECK_THROWS_AS(angle_between(e1, Vec{0.0, 1.0}), DimensionMismatch);
}

TEST_CASE("angle_between: symmetry and spherical triangle inequality") {
    std::uint64_t s = 1234;
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + mix(s) % 6;
        Vec u = random_unit(s, n);
        Vec v = random_unit(s, n);
        Vec w = random_unit(s, n);
        double uv = angle_between(u, v);
        CHECK(uv == doctest::Approx(angle_between(v, u)).epsilon(1e-14));
        CHECK(angle_between(u, w) <= uv + angle_between(v, w) + 1e-12);
    }
}

TEST_CASE("unit_angle matches angle_between and keeps precision for tiny angles") {
    std::uint64_t s = 88;
    for (int trial = 0; trial < 200; ++trial) {
        Vec u = random_unit(s, 4);
        Vec v = random_unit(s, 4);
        CHECK(std::abs(unit_angle(u, v) - angle_between(u, v)) <= 1e-12);
    }
    // tiny rotation: arccos would only resolve ~1e-8 here
    Vec u{1.0, 0.0};
    double eps = 1e-9;
    Vec v = normalized(Vec{1.0, eps});
    CHECK(unit_angle(u, v) == doctest::Approx(eps).epsilon(1e-9));
}

TEST_CASE("within_tol semantics") {
    CHECK(within_tol(1e-10, 1.0));
    CHECK(!within_tol(1e-8, 1.0));
    CHECK(within_tol(5e-13, 0.0)); // absolute floor near zero scale
    CHECK(within_tol(0.5, 1e9, 1e-9));
}
