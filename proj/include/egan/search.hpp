#pragma once

#include "egan/euclid.hpp"
#include "egan/generators.hpp"

#include <cstdint>
#include <vector>

// Extremal search: drive the normalized slack (slack / R^2) downhill with a
// derivative-free simplex walk over vertex coordinates.  The inequality says
// the infimum is 0; the search exists to confirm numerically that nothing
// below 0 is reachable and to expose the near-equality shapes it finds.

namespace egan {

struct SearchResult {
    EuclideanSimplex best;
    double best_slack = 0.0;        // normalized slack at the best point
    std::vector<double> trace;      // best-so-far objective per iteration (nonincreasing)
    std::uint64_t iterations_run = 0;
};

// Starts from gen_euclidean(cfg, 0) and runs at most max_iterations steps.
// Secondary restarts reuse the budget; the result is deterministic in cfg.
SearchResult extremal_search(const TrialConfig& cfg, std::uint64_t max_iterations);

} // namespace egan
