#include "levelga/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "levelga/harness/stats.hpp"
#include "levelga/neighborhood.hpp"
#include "levelga/partition.hpp"
#include "levelga/random.hpp"

namespace levelga::harness {

void ExperimentSpec::validate() const {
    if (sizes.empty()) throw std::invalid_argument("experiment: need at least one size");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("experiment: sizes must be strictly increasing");
    if (trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (!make_problem || !make_config)
        throw std::invalid_argument("experiment: problem and config builders are required");
}

namespace {

LevelPartition build_partition(const Problem& problem, const NeighborhoodSpec& nbhd,
                               PartitionChoice choice) {
    switch (choice) {
        case PartitionChoice::Canonical: return canonical_partition(problem);
        case PartitionChoice::MergedLocalOptima: return merged_local_optima_partition(problem, nbhd);
        case PartitionChoice::General: return general_partition(problem, nbhd);
    }
    throw std::logic_error("experiment: unknown partition choice");
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();

    ExperimentResult result;
    const std::size_t workers =
        spec.threads ? spec.threads : std::max<std::size_t>(1, std::thread::hardware_concurrency());

    for (std::size_t size_idx = 0; size_idx < spec.sizes.size(); ++size_idx) {
        const std::size_t size = spec.sizes[size_idx];
        const std::unique_ptr<Problem> problem = spec.make_problem(size);
        const NeighborhoodSpec nbhd = NeighborhoodSpec::hamming(problem->neighborhood_radius());
        const LevelPartition partition = build_partition(*problem, nbhd, spec.partition);
        const GAConfig config = spec.make_config(*problem);

        SizeStats row;
        row.family = spec.family;
        row.size = size;
        row.n = problem->dimension();
        row.lambda = config.lambda;
        row.sel_param = config.selection.parameter();
        row.pm = config.mutation.rate();
        row.pc = config.crossover.rate();
        row.trials = spec.trials;
        row.raw.assign(spec.trials, 0.0);
        row.censored_flags.assign(spec.trials, 0);

        RandomStream size_stream = RandomStream(spec.seed).substream(size_idx);

        std::atomic<std::size_t> next{0};
        std::mutex error_mutex;
        std::exception_ptr first_error;
        const auto worker = [&]() {
            for (;;) {
                const std::size_t trial = next.fetch_add(1);
                if (trial >= spec.trials) return;
                try {
                    RandomStream rng = size_stream.substream(trial);
                    const RunResult run = run_ga(*problem, partition, config, rng);
                    row.raw[trial] = run.censored ? static_cast<double>(run.evaluations)
                                                  : static_cast<double>(run.hitting_time);
                    row.censored_flags[trial] = run.censored ? 1 : 0;
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const std::size_t spawn = std::min(workers, spec.trials);
        pool.reserve(spawn);
        for (std::size_t w = 0; w < spawn; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);

        std::vector<double> clean;
        clean.reserve(spec.trials);
        for (std::size_t t = 0; t < spec.trials; ++t) {
            if (row.censored_flags[t])
                ++row.censored;
            else
                clean.push_back(row.raw[t]);
        }
        if (clean.empty()) {
            row.mean_t = row.median_t = row.ci_lo = row.ci_hi =
                std::numeric_limits<double>::quiet_NaN();
            row.ci_degenerate = true;
        } else {
            const MeanCI ci = mean_ci(clean);
            row.mean_t = ci.mean;
            row.median_t = median(clean);
            row.ci_lo = ci.lo;
            row.ci_hi = ci.hi;
            row.ci_degenerate = ci.degenerate;
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

ScalingFit fit_scaling(const std::vector<SizeStats>& rows) {
    if (rows.size() < 3) throw std::invalid_argument("scaling fit: need at least 3 sizes");
    std::vector<double> ln_n, ln_t, g, t;
    bool nlnln_ok = true;
    for (const SizeStats& row : rows) {
        if (row.censored == row.trials || !std::isfinite(row.mean_t))
            throw std::runtime_error("scaling fit: size " + std::to_string(row.n) +
                                     " is fully censored (" + std::to_string(row.censored) + "/" +
                                     std::to_string(row.trials) + " trials); raise the cap");
        if (row.mean_t <= 0.0)
            throw std::runtime_error("scaling fit: size " + std::to_string(row.n) +
                                     " has mean hitting time 0 (every trial hit at "
                                     "initialization); the log-log fit needs larger sizes");
        const auto n = static_cast<double>(row.n);
        ln_n.push_back(std::log(n));
        ln_t.push_back(std::log(row.mean_t));
        if (n >= 3.0) {
            g.push_back(n * std::log(n) * std::log(std::log(n)));
            t.push_back(row.mean_t);
        } else {
            nlnln_ok = false;
        }
    }
    ScalingFit fit;
    const OlsFit line = ols(ln_n, ln_t);
    fit.slope = line.slope;
    fit.slope_stderr = line.slope_stderr;
    fit.intercept = line.intercept;
    if (nlnln_ok) {
        fit.nlnln_constant = through_origin_constant(g, t);
        fit.nlnln_valid = true;
    }
    return fit;
}

ScalingReport scaling_study(const ExperimentSpec& spec) {
    if (spec.sizes.size() < 3)
        throw std::invalid_argument("scaling study: need at least 3 sizes");
    ScalingReport report;
    report.result = run_experiment(spec);
    report.fit = fit_scaling(report.result.rows);
    return report;
}

}  // namespace levelga::harness
