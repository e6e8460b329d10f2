#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levelga/ga.hpp"
#include "levelga/neighborhood.hpp"
#include "levelga/partition.hpp"
#include "levelga/problem.hpp"
#include "levelga/random.hpp"
#include "levelga/theory/bounds.hpp"

namespace levelga::theory {

enum class CheckMethod { ClosedForm, Exhaustive, MonteCarlo, Skipped };
const char* to_string(CheckMethod method);

/// One verified requirement. `measured` is the worst-case quantity found
/// (a probability floor, or a margin for the selection-pressure checks);
/// exact methods carry no confidence data, Monte Carlo entries record their
/// sample counts in `samples`.
struct ConditionEntry {
    std::string id;
    bool pass = false;
    bool skipped = false;
    double measured = 0.0;
    double threshold = 0.0;
    CheckMethod method = CheckMethod::Skipped;
    std::size_t samples = 0;
    std::string witness;
    std::string note;
};

/// Closed-form probability floors for instance families where enumeration is
/// unnecessary: per-level upgrade floors s (size m, or size 1 meaning the
/// same floor at every level), stay probability p0 and crossover
/// preservation eps.
struct AnalyticBounds {
    std::vector<double> s;
    double p0 = 0.0;
    double eps = 0.0;
};

/// Block-valued function of n/r blocks under bitwise mutation at rate chi/n
/// and single-point crossover at rate pc: completing the worst incomplete
/// block costs (chi/n)^r (1-chi/n)^(n-r), and a string at level j has
/// m - j + 1 incomplete blocks left.
AnalyticBounds royal_road_bounds(std::size_t n, std::size_t r, double chi, double pc);

/// Triangle-cover instances with kappa disjoint triangles under bitwise
/// mutation at rate pm: every uncovered triangle has at least 3 single-bit
/// repairs, so s_j = 3 (kappa - j + 1) pm (1-pm)^(n-1) with n = 3 kappa.
AnalyticBounds triangle_cover_bounds(std::size_t kappa, double pm, double pc);

struct CheckSettings {
    enum class Mode { Exhaustive, MonteCarlo };
    Mode mode = Mode::Exhaustive;

    double delta = 1.0;
    /// Overrides the selection-pressure threshold derived from the measured
    /// eps and p0 (or from mu/lambda for comma selection).
    std::optional<double> gamma0;
    /// When set, the mutation and crossover floors come from these closed
    /// forms instead of being measured; enables arbitrarily large instances.
    std::optional<AnalyticBounds> analytic;

    std::size_t grid_points = 100;

    // Monte Carlo controls.
    std::size_t string_samples = 4096;
    std::size_t per_level_points = 24;
    std::size_t per_point_draws = 20000;

    // Population universes for the selection-pressure checks.
    std::uint64_t composition_limit = 200000;
    std::size_t composition_samples = 2000;
};

/// Outcome of check_conditions: one entry per requirement plus the measured
/// floors, assembled into BoundParams when every floor is positive.
struct ConditionReport {
    int m = 0;
    std::size_t lambda = 0;
    double delta = 0.0;
    double gamma0 = 0.0;

    std::vector<ConditionEntry> entries;
    std::vector<double> s_hat;  // per level 1..m; index j-1
    double s_star = 0.0;
    double p0_hat = 0.0;
    double eps_hat = 0.0;

    std::optional<BoundParams> params;

    /// True when no non-skipped entry failed.
    bool all_passed() const;
    const ConditionEntry* find(std::string_view id) const;
};

/// Verifies the runtime guarantee's requirements for this instance, level
/// partition and operator configuration.
///
/// Checked entries:
///   C1   worst upgrade probability per level (strings at level >= j
///        reaching level >= j+1 under mutation),
///   C2   worst retention probability (strings at level >= j+1 staying
///        there), C2' the stronger point-stay form P(mut(x) = x),
///   C3   worst crossover preservation over parent pairs at levels
///        (>= j, >= j+1) for j in 1..m, C3' the same excluding j = m,
///   C4   selection pressure beta(gamma) >= gamma sqrt((1+delta)/
///        (p0 eps gamma0)) over a gamma grid and a universe of level-count
///        populations; C4' the same over target-free populations,
///   C5   the configured lambda against the population-size bound,
///   L1   worst probability of producing a designated neighbor,
///   L2   worst probability of mutating an infeasible string into the
///        feasible set,
///   L3   positive worst-case probability that crossover preserves the
///        better parent's fitness.
///
/// Exhaustive mode enumerates the cube (dimension <= 12) unless analytic
/// floors are supplied. Results are deterministic given the stream.
ConditionReport check_conditions(const Problem& problem, const LevelPartition& partition,
                                 const NeighborhoodSpec& nbhd, const GAConfig& config,
                                 const CheckSettings& settings, RandomStream& rng);

/// Plain-text rendering, one line per entry.
std::string format_report(const ConditionReport& report);

}  // namespace levelga::theory
