#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levelga/ga.hpp"
#include "levelga/problem.hpp"

namespace levelga::harness {

enum class PartitionChoice { Canonical, MergedLocalOptima, General };

/// A batch of repeated runs over a list of instance sizes. The problem and
/// GA configuration are built per size, so parameters may scale with n
/// (mutation rate chi/n, population ceil(b ln n), advisor-driven k).
struct ExperimentSpec {
    std::string family;  // label carried into result rows
    std::vector<std::size_t> sizes;
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    PartitionChoice partition = PartitionChoice::Canonical;
    std::size_t threads = 0;  // 0 = hardware concurrency

    std::function<std::unique_ptr<Problem>(std::size_t size)> make_problem;
    std::function<GAConfig(const Problem& problem)> make_config;

    void validate() const;
};

/// Per-size result row. Statistics cover uncensored trials only; raw holds
/// every trial's evaluation count in trial order (censored trials record the
/// evaluations consumed before the cap stopped them).
struct SizeStats {
    std::string family;
    std::size_t size = 0;    // family size parameter
    std::size_t n = 0;       // bitstring dimension
    std::size_t lambda = 0;
    double sel_param = 0.0;  // k, mu or eta
    double pm = 0.0;
    double pc = 0.0;
    std::size_t trials = 0;
    std::size_t censored = 0;
    double mean_t = 0.0;  // NaN when every trial was censored
    double median_t = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    bool ci_degenerate = false;

    std::vector<double> raw;
    std::vector<std::uint8_t> censored_flags;
};

struct ExperimentResult {
    std::vector<SizeStats> rows;
};

/// Runs trials across a worker pool. Each trial draws from the substream
/// chain (seed, size index, trial index), so results are deterministic for
/// a given spec regardless of thread count. The first exception thrown by
/// any trial is re-thrown after the pool drains.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Log-log regression of mean evaluations against dimension, plus a
/// through-origin fit of mean evaluations against n ln(n) ln(ln(n)) when
/// every dimension is >= 3.
struct ScalingFit {
    double slope = 0.0;
    double slope_stderr = 0.0;
    double intercept = 0.0;
    double nlnln_constant = 0.0;
    bool nlnln_valid = false;
};

/// Throws std::invalid_argument on fewer than 3 rows and std::runtime_error
/// when any row is fully censored (no mean to regress on).
ScalingFit fit_scaling(const std::vector<SizeStats>& rows);

struct ScalingReport {
    ExperimentResult result;
    ScalingFit fit;
};

ScalingReport scaling_study(const ExperimentSpec& spec);

}  // namespace levelga::harness
