#pragma once

#include "egan/euclid.hpp"
#include "egan/linalg.hpp"
#include "egan/spherical.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

// Deterministic random-simplex generators for falsification scans and
// property tests.  Every trial is a pure function of (config, index).

namespace egan {

enum class GeneratorKind {
    gaussian,          // i.i.d. standard-normal vertices, rejected when degenerate
    near_degenerate,   // gaussian shape flattened into a controlled thinness band
    regular_perturbed, // regular simplex plus a small gaussian perturbation
};

GeneratorKind parse_generator(std::string_view name); // throws InvalidConfig
std::string generator_name(GeneratorKind kind);

struct TrialConfig {
    int dim = 3;                 // euclidean dimension, or ambient dimension m for spherical
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    GeneratorKind generator = GeneratorKind::gaussian;
    double rtol = kDefaultRtol;  // violation threshold, relative to the squared scale
    double perturbation = 1e-3;  // regular_perturbed displacement size (0 = exact regular)
};

// Thinness band targeted by the near_degenerate generator (normalized Gram
// determinant for euclidean shapes, |det| of the vertex matrix for spherical).
inline constexpr double kNearDegenerateLow = 1e-11;
inline constexpr double kNearDegenerateHigh = 1e-7;

// Spherical gaussian draws are rejected below this |det|: thinner simplices
// make the equality-case margin checks drown in cancellation noise.  The
// polar simplex must clear the second floor too — multi-directionally flat
// draws have polars whose determinant collapses several orders further.
inline constexpr double kSphericalDetFloor = 1e-4;
inline constexpr double kSphericalPolarDetFloor = 1e-6;

// The spherical near_degenerate generator pulls one vertex to angle theta
// above the span of the others.  Every polar column then grows like
// 1/theta, so the polar determinant shrinks like theta^(m-1); draws whose
// polar determinant still falls below kSphericalThinPolarFloor are retried.
inline constexpr double kSphericalThinPolarFloor = 1e-11;

// sin(theta) band for those draws: the lower edge sits where theta^(m-1)
// meets the polar floor, and the band spans one decade above it (capped
// well below any fat-simplex angle).  The vertex-matrix determinant of a
// generated simplex is at most band.second.
std::pair<double, double> spherical_thin_angle_band(int m);

// Gaussian spherical draws also keep beta + gamma - alpha - pi/2 above this:
// certificate noise grows like (angle error)/(that margin), so unboundedly
// flat pairs turn the m = 3 equality case into pure cancellation.  The
// near_degenerate generator exists to probe below the floor deliberately.
inline constexpr double kSphericalAngleFloor = 1e-2;

void validate_euclidean_config(const TrialConfig& cfg);  // dim in [2, 16]
void validate_spherical_config(const TrialConfig& cfg);  // dim (= m) in [3, 16]

// Both throw GenerationExhausted if 100 attempts fail to produce an
// acceptable shape, and InvalidConfig for out-of-range configs.
EuclideanSimplex gen_euclidean(const TrialConfig& cfg, std::uint64_t index);
SphericalSimplex gen_spherical(const TrialConfig& cfg, std::uint64_t index);

} // namespace egan
