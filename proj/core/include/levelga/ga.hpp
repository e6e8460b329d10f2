#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "levelga/crossover.hpp"
#include "levelga/mutation.hpp"
#include "levelga/partition.hpp"
#include "levelga/population.hpp"
#include "levelga/problem.hpp"
#include "levelga/random.hpp"
#include "levelga/selection.hpp"

namespace levelga {

struct GAConfig {
    std::size_t lambda = 2;
    SelectionOp selection = SelectionOp::tournament(2);
    CrossoverOp crossover = CrossoverOp::single_point(0.0);
    MutationOp mutation = MutationOp::bitwise(0.0);
    std::uint64_t max_evaluations = 100'000'000;  // censoring cap, counted in evaluations
    /// Deterministic handling of target-level members (see run_ga_locked).
    bool lock_target = false;
};

struct RunResult {
    /// Offspring count tλ of the first generation whose population touches
    /// the target level; 0 when the initial population already does.
    /// Meaningless when censored.
    std::uint64_t hitting_time = 0;
    std::uint64_t generations = 0;
    bool censored = false;
    /// Best (highest) level present per population, entry 0 = initial one.
    std::vector<int> best_level_trace;
    /// Fitness evaluations spent: (generations + 1) * lambda.
    std::uint64_t evaluations = 0;
};

/// lambda individuals drawn uniformly from {0,1}^n, fitness evaluated,
/// levels unset (not yet sorted).
Population init_population(const Problem& problem, std::size_t lambda, RandomStream& rng);

using GenerationObserver = std::function<void(std::uint64_t t, const Population& pop)>;

/// Generational non-elitist GA: each offspring picks two parents by
/// independent selections, recombines them into one child and mutates it.
/// Stops after the first full generation containing a target-level member
/// (no mid-generation stopping) or once generations*lambda reaches the
/// evaluation cap (censored).
RunResult run_ga(const Problem& problem, const LevelPartition& partition, const GAConfig& config,
                 RandomStream& rng, const GenerationObserver& observer = {});

/// run_ga with lock_target on: while no parent population holds a target
/// member the run is draw-for-draw identical to run_ga, so both hit at the
/// same time under the same seed; once a target member is present, selection
/// deterministically returns the best-ranked one and crossover passes target
/// parents through unchanged.
RunResult run_ga_locked(const Problem& problem, const LevelPartition& partition, GAConfig config,
                        RandomStream& rng, const GenerationObserver& observer = {});

/// The locked selection rule by itself: first target-level rank if one
/// exists (consuming no randomness), otherwise an ordinary selection.
std::size_t select_locked(const SelectionOp& sel, const Population& pop, int target_level,
                          RandomStream& rng);

/// The locked recombination rule by itself: a target-level parent is copied
/// through unchanged (first argument preferred), otherwise ordinary
/// crossover.
BitString crossover_locked(const CrossoverOp& op, const Individual& a, const Individual& b,
                           int target_level, RandomStream& rng);

}  // namespace levelga
