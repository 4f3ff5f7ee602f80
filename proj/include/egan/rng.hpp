#pragma once

#include <array>
#include <cstdint>

// Deterministic randomness for trial harnesses: xoshiro256++ streams whose
// state is derived with splitmix64 from (seed, trial index).  The same
// (seed, index) always yields the same draws, on every platform, so trials
// can run in any order or thread layout without changing results.

namespace egan {

class Rng {
public:
    // Stream for one trial.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next();

    // uniform in [0, 1)
    double uniform01();

    // standard normal via Box-Muller (pairs are cached)
    double gaussian();

private:
    explicit Rng(std::array<std::uint64_t, 4> state) : s_(state) {}

    std::array<std::uint64_t, 4> s_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace egan
