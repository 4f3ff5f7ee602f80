#pragma once

#include "egan/euclid.hpp"
#include "egan/generators.hpp"

#include <cstdint>
#include <optional>

// Falsification scans: hammer the inequality with random simplices and
// report the worst slack seen.  Results are a pure function of the config
// (thread count never changes them, only the wall time).

namespace egan {

struct ScanReport {
    TrialConfig config;
    double min_slack = 0.0;            // raw slack at the worst trial
    double min_slack_normalized = 0.0; // slack / R^2 at the worst trial
    std::uint64_t argmin_index = 0;    // trial index of the worst case
    std::optional<EuclideanSimplex> argmin;
    std::uint64_t violations = 0;      // trials with slack < -rtol * R^2
    std::uint64_t trials_run = 0;
    double elapsed = 0.0;              // seconds; diagnostic only, never serialized
};

// Worker count: EGAN_VERIFY_THREADS when set (clamped to [1, 256]),
// otherwise the hardware concurrency.
unsigned effective_threads();

ScanReport falsify_scan(const TrialConfig& cfg);

} // namespace egan
