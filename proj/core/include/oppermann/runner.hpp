// runner.hpp
// Range orchestration: consecutive segment tiling, worker-pool parallelism
// over groups of segments, ordered merge, atomic checkpointing, and CSV
// report emission. Report bytes are independent of worker count and
// scheduling; a resumed run reproduces an uninterrupted run exactly.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

#include "oppermann/sieve.hpp"

namespace oppermann {

struct RunConfig {
    uint64_t start_n = 2;
    uint64_t end_n = 2;
    unsigned workers = 0;  // 0 = hardware concurrency
    SieveConfig sieve;
    uint32_t group_size = 64;  // segments per work unit
    std::string rtable_path;   // empty: generate one covering the range
    std::string report_path = "report.csv";
    std::string checkpoint_path;  // empty: no checkpointing / resume
};

enum class RunStatus : int {
    ok = 0,
    error = 1,
    attention = 2,    // counterexample-candidate rows present
    conditional = 3,  // rows proven only by strong probable-prime tests
};

struct RunSummary {
    RunStatus status = RunStatus::ok;
    bool aborted = false;  // stopped early by a test hook
    uint64_t segments = 0;
    uint64_t intervals = 0;
    std::array<uint64_t, 6> fallback_histogram{};  // found rows per level 0..5
    uint64_t counterexamples = 0;
    uint64_t unproven = 0;
    uint64_t inconclusive_skips = 0;
    uint64_t bls_failures = 0;
    uint64_t candidates_tested = 0;
    double max_gap_ratio = 0.0;  // max (prime - lo) / (hi - lo)
    uint64_t last_n = 0;

    double avg_failed_bls() const {
        return intervals == 0 ? 0.0 : double(bls_failures) / double(intervals);
    }
};

// Crash simulation for tests: consulted after each merged group, once per
// phase; returning true abandons the run at that exact point.
struct RunHooks {
    enum class Phase : uint8_t { rows_written, checkpoint_written };
    std::function<bool(uint64_t group_index, Phase)> stop_after;
};

// Verifies every n in [start_n, end_n], writing the report (and checkpoint,
// when configured). Throws on configuration and I/O errors; data-level
// problems surface in the status instead.
RunSummary run_verification(const RunConfig& config);
RunSummary run_verification(const RunConfig& config, const RunHooks& hooks);

}  // namespace oppermann
