#include "egan/scan.hpp"

#include "egan/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace egan {

unsigned effective_threads() {
    if (const char* env = std::getenv("EGAN_VERIFY_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<unsigned>(std::min(v, 256l));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

namespace {

struct Partial {
    double min_normalized = std::numeric_limits<double>::infinity();
    double min_raw = 0.0;
    std::uint64_t argmin_index = 0;
    std::uint64_t violations = 0;
    bool any = false;
};

// One contiguous index range.  Trials are independent streams, so the split
// never influences the outcome.
Partial run_range(const TrialConfig& cfg, std::uint64_t begin, std::uint64_t end) {
    Partial p;
    for (std::uint64_t i = begin; i < end; ++i) {
        const EuclideanSimplex s = gen_euclidean(cfg, i);
        const EganReport rep = egan_report(s);
        const double scale = rep.R * rep.R;
        const double normalized = rep.slack / scale;
        if (rep.slack < -cfg.rtol * scale) ++p.violations;
        if (!p.any || normalized < p.min_normalized) {
            p.any = true;
            p.min_normalized = normalized;
            p.min_raw = rep.slack;
            p.argmin_index = i;
        }
    }
    return p;
}

} // namespace

ScanReport falsify_scan(const TrialConfig& cfg) {
    validate_euclidean_config(cfg);
    const auto start = std::chrono::steady_clock::now();

    const std::uint64_t trials = cfg.trials;
    const unsigned threads =
        static_cast<unsigned>(std::min<std::uint64_t>(effective_threads(), trials));

    std::vector<Partial> parts(threads);
    if (threads <= 1) {
        parts[0] = run_range(cfg, 0, trials);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mu;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = trials * t / threads;
            const std::uint64_t end = trials * (t + 1) / threads;
            pool.emplace_back([&, t, begin, end] {
                try {
                    parts[t] = run_range(cfg, begin, end);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    // Merge in index order; strict < keeps the earliest argmin on ties.
    Partial best;
    std::uint64_t violations = 0;
    for (const Partial& p : parts) {
        violations += p.violations;
        if (p.any && (!best.any || p.min_normalized < best.min_normalized)) {
            best = p;
            best.any = true;
        }
    }

    ScanReport report;
    report.config = cfg;
    report.trials_run = trials;
    report.violations = violations;
    report.min_slack = best.min_raw;
    report.min_slack_normalized = best.min_normalized;
    report.argmin_index = best.argmin_index;
    report.argmin = gen_euclidean(cfg, best.argmin_index);
    report.elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace egan
