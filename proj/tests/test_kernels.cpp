#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "egan/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

// A tiny deterministic generator is enough here; the harness RNG is tested
// separately.
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

std::vector<double> random_array(std::uint64_t& s, std::size_t n, double scale) {
    std::vector<double> a(n);
    for (double& x : a)
        x = scale * uniform_pm1(s);
    return a;
}

} // namespace

using namespace egan;

TEST_CASE("scalar kernels are always available and named") {
    const kern::Kernels& k = kern::scalar_kernels();
    CHECK(std::string_view(k.name) == "scalar");
    CHECK(kern::kernels_by_name("scalar") == &k);
    CHECK(kern::kernels_by_name("nonsense") == nullptr);
    auto avail = kern::available_kernels();
    REQUIRE(!avail.empty());
    CHECK(avail[0] == &k);
}

TEST_CASE("dot handles empty and short arrays") {
    for (const kern::Kernels* k : kern::available_kernels()) {
        CAPTURE(k->name);
        double a[5] = {1, 2, 3, 4, 5};
        double b[5] = {5, 4, 3, 2, 1};
        CHECK(k->dot(a, b, 0) == 0.0);
        CHECK(k->dot(a, b, 1) == 5.0);
        CHECK(k->dot(a, b, 5) == doctest::Approx(35.0));
        CHECK(k->norm_sq(a, 5) == doctest::Approx(55.0));
    }
}

TEST_CASE("every variant matches scalar within reassociation tolerance") {
    const kern::Kernels& ref = kern::scalar_kernels();
    std::uint64_t s = 12345;
    for (const kern::Kernels* k : kern::available_kernels()) {
        CAPTURE(k->name);
        for (std::size_t n = 0; n <= 67; ++n) {
            auto a = random_array(s, n, 3.0);
            auto b = random_array(s, n, 2.0);
            double tol = 1e-14 * (1.0 + static_cast<double>(n));

            CHECK(std::abs(k->dot(a.data(), b.data(), n) -
                           ref.dot(a.data(), b.data(), n)) <= tol);
            CHECK(std::abs(k->norm_sq(a.data(), n) -
                           ref.norm_sq(a.data(), n)) <= tol);

            auto ya = a, yb = a;
            k->axpy(0.75, b.data(), ya.data(), n);
            ref.axpy(0.75, b.data(), yb.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(ya[i] == yb[i]); // axpy is elementwise, no reassociation

            std::vector<double> da(n), db(n);
            k->sub(a.data(), b.data(), da.data(), n);
            ref.sub(a.data(), b.data(), db.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(da[i] == db[i]);
        }
    }
}

TEST_CASE("matvec variants agree") {
    const kern::Kernels& ref = kern::scalar_kernels();
    std::uint64_t s = 777;
    for (const kern::Kernels* k : kern::available_kernels()) {
        CAPTURE(k->name);
        for (std::size_t rows : {1u, 3u, 8u, 17u}) {
            for (std::size_t cols : {1u, 4u, 9u, 16u}) {
                auto m = random_array(s, rows * cols, 1.0);
                auto x = random_array(s, cols, 1.0);
                std::vector<double> ya(rows), yb(rows);
                k->matvec(m.data(), rows, cols, x.data(), ya.data());
                ref.matvec(m.data(), rows, cols, x.data(), yb.data());
                for (std::size_t i = 0; i < rows; ++i)
                    CHECK(std::abs(ya[i] - yb[i]) <= 1e-14 * (1.0 + static_cast<double>(cols)));
            }
        }
    }
}

TEST_CASE("compensated dot survives catastrophic cancellation") {
    // Pairs (x, 1) and (-x + tiny, 1): the naive sum loses the tiny part,
    // dot2 must keep it.  Exact value: n * tiny.
    for (const kern::Kernels* k : kern::available_kernels()) {
        CAPTURE(k->name);
        const std::size_t n = 40;
        const double big = 1e16;
        const double tiny = 0.0625; // exactly representable
        std::vector<double> a, b;
        for (std::size_t i = 0; i < n; ++i) {
            a.push_back(big);
            b.push_back(1.0);
            a.push_back(-big);
            b.push_back(1.0);
            a.push_back(tiny);
            b.push_back(1.0);
        }
        double exact = tiny * static_cast<double>(n);
        double got = k->dot2(a.data(), b.data(), a.size());
        CHECK(got == doctest::Approx(exact).epsilon(1e-15));
    }
}

TEST_CASE("dot2 agrees with dot on benign data to machine precision") {
    std::uint64_t s = 2024;
    for (const kern::Kernels* k : kern::available_kernels()) {
        CAPTURE(k->name);
        for (std::size_t n : {1u, 5u, 31u, 64u}) {
            auto a = random_array(s, n, 1.0);
            auto b = random_array(s, n, 1.0);
            double d1 = kern::scalar_kernels().dot2(a.data(), b.data(), n);
            double d2 = k->dot2(a.data(), b.data(), n);
            // Both are exact-to-1-ulp evaluations of the same sum.
            CHECK(std::abs(d1 - d2) <= 4e-16 * (1.0 + std::abs(d1)));
        }
    }
}
