#include "levelga/ga.hpp"

#include <stdexcept>

namespace levelga {

namespace {

void validate(const GAConfig& config, const Problem& problem) {
    if (config.lambda < 2)
        throw std::invalid_argument("run_ga: population size must be >= 2");
    if (config.max_evaluations < 1)
        throw std::invalid_argument("run_ga: evaluation cap must be >= 1");
    if (config.selection.kind() == SelectionOp::Kind::MuLambda &&
        static_cast<std::size_t>(config.selection.mu()) > config.lambda)
        throw std::invalid_argument("run_ga: mu exceeds lambda");
    if (problem.dimension() < 1) throw std::invalid_argument("run_ga: empty problem");
}

bool has_target(const Population& pop, int target_level) {
    // Sorted best-first, so the top rank decides.
    return pop.at_rank(1).level == target_level;
}

}  // namespace

Population init_population(const Problem& problem, std::size_t lambda, RandomStream& rng) {
    if (lambda < 2) throw std::invalid_argument("init_population: lambda must be >= 2");
    const std::size_t n = problem.dimension();
    std::vector<Individual> members;
    members.reserve(lambda);
    for (std::size_t i = 0; i < lambda; ++i) {
        BitString x(n);
        for (std::size_t b = 0; b < n; ++b)
            if (rng.bernoulli(0.5)) x.flip(b);
        Individual ind;
        ind.fitness = fitness(problem, x);
        ind.genotype = std::move(x);
        members.push_back(std::move(ind));
    }
    return Population(std::move(members));
}

std::size_t select_locked(const SelectionOp& sel, const Population& pop, int target_level,
                          RandomStream& rng) {
    for (std::size_t r = 1; r <= pop.lambda(); ++r)
        if (pop.at_rank(r).level == target_level) return r;
    return sel.select(pop, rng);
}

BitString crossover_locked(const CrossoverOp& op, const Individual& a, const Individual& b,
                           int target_level, RandomStream& rng) {
    if (a.level == target_level) return a.genotype;
    if (b.level == target_level) return b.genotype;
    return op.apply(a.genotype, b.genotype, rng);
}

RunResult run_ga(const Problem& problem, const LevelPartition& partition, const GAConfig& config,
                 RandomStream& rng, const GenerationObserver& observer) {
    validate(config, problem);
    const int target = partition.target_level();
    const std::uint64_t lambda = config.lambda;

    Population pop = sort_population(init_population(problem, config.lambda, rng), partition);
    if (observer) observer(0, pop);

    RunResult result;
    result.best_level_trace.push_back(pop.at_rank(1).level);
    if (has_target(pop, target)) {
        result.hitting_time = 0;
        result.evaluations = lambda;
        return result;
    }

    while (true) {
        if (result.generations * lambda >= config.max_evaluations) {
            result.censored = true;
            break;
        }
        std::vector<Individual> offspring;
        offspring.reserve(config.lambda);
        for (std::size_t j = 0; j < config.lambda; ++j) {
            std::size_t ra, rb;
            if (config.lock_target) {
                ra = select_locked(config.selection, pop, target, rng);
                rb = select_locked(config.selection, pop, target, rng);
            } else {
                ra = config.selection.select(pop, rng);
                rb = config.selection.select(pop, rng);
            }
            const Individual& pa = pop.at_rank(ra);
            const Individual& pb = pop.at_rank(rb);
            BitString child = config.lock_target
                                  ? crossover_locked(config.crossover, pa, pb, target, rng)
                                  : config.crossover.apply(pa.genotype, pb.genotype, rng);
            child = config.mutation.apply(problem, child, rng);
            Individual ind;
            ind.fitness = fitness(problem, child);
            ind.genotype = std::move(child);
            offspring.push_back(std::move(ind));
        }
        pop = sort_population(Population(std::move(offspring)), partition);
        ++result.generations;
        if (observer) observer(result.generations, pop);
        result.best_level_trace.push_back(pop.at_rank(1).level);
        if (has_target(pop, target)) {
            result.hitting_time = result.generations * lambda;
            break;
        }
    }
    result.evaluations = (result.generations + 1) * lambda;
    return result;
}

RunResult run_ga_locked(const Problem& problem, const LevelPartition& partition, GAConfig config,
                        RandomStream& rng, const GenerationObserver& observer) {
    config.lock_target = true;
    return run_ga(problem, partition, config, rng, observer);
}

}  // namespace levelga
