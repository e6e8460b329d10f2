#include <doctest.h>

#include <vector>

#include "levelga/ga.hpp"
#include "levelga/neighborhood.hpp"
#include "levelga/problems/onemax.hpp"
#include "levelga/problems/royal_road.hpp"
#include "levelga/problems/toy_npo.hpp"
#include "support.hpp"

using namespace levelga;

namespace {

GAConfig small_config(std::size_t lambda, double pm) {
    GAConfig config;
    config.lambda = lambda;
    config.selection = SelectionOp::tournament(4);
    config.crossover = CrossoverOp::single_point(0.0);
    config.mutation = MutationOp::bitwise(pm);
    return config;
}

}  // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("init_population draws lambda evaluated members") {
    const OneMax problem(10);
    RandomStream rng(2);
    const Population pop = init_population(problem, 6, rng);
    CHECK(pop.lambda() == 6);
    CHECK_FALSE(pop.sorted());
    for (const Individual& ind : pop.members()) {
        CHECK(ind.genotype.size() == 10);
        CHECK(ind.fitness == static_cast<Fitness>(ind.genotype.count_ones()));
        CHECK(ind.level == 0);
    }
}

TEST_CASE("hitting time is zero exactly when the first population hits") {
    const OneMax problem(4);
    const LevelPartition p = canonical_partition(problem);
    const GAConfig config = small_config(4, 0.25);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RandomStream probe(seed);
        const Population pop = sort_population(init_population(problem, 4, probe), p);
        const bool init_hits = pop.at_rank(1).level == p.target_level();

        RandomStream rng(seed);
        const RunResult run = run_ga(problem, p, config, rng);
        REQUIRE_FALSE(run.censored);
        CHECK((run.hitting_time == 0) == init_hits);
        CHECK(run.hitting_time == run.generations * config.lambda);
        CHECK(run.evaluations == (run.generations + 1) * config.lambda);
        CHECK(run.best_level_trace.size() == run.generations + 1);
        CHECK(run.best_level_trace.back() == p.target_level());
    }
}

TEST_CASE("censoring stops at the evaluation cap") {
    const OneMax problem(16);
    const LevelPartition p = canonical_partition(problem);
    GAConfig config = small_config(4, 0.0);  // pm = 0: the optimum is unreachable
    config.max_evaluations = 40;
    RandomStream rng(5);
    const RunResult run = run_ga(problem, p, config, rng);
    CHECK(run.censored);
    // censored exactly when the next generation would start at or past the cap
    CHECK(run.generations * config.lambda >= 40);
    CHECK((run.generations - 1) * config.lambda < 40);
    CHECK(run.evaluations == (run.generations + 1) * config.lambda);
}

TEST_CASE("runs are reproducible from the seed") {
    const RoyalRoad problem(8, 2);
    const LevelPartition p = canonical_partition(problem);
    const GAConfig config = small_config(6, 1.0 / 8);
    RandomStream a(99), b(99);
    const RunResult r1 = run_ga(problem, p, config, a);
    const RunResult r2 = run_ga(problem, p, config, b);
    CHECK(r1.hitting_time == r2.hitting_time);
    CHECK(r1.generations == r2.generations);
    CHECK(r1.best_level_trace == r2.best_level_trace);
}

TEST_CASE("observer sees every generation including the first") {
    const OneMax problem(6);
    const LevelPartition p = canonical_partition(problem);
    const GAConfig config = small_config(4, 1.0 / 6);
    RandomStream rng(3);
    std::vector<std::uint64_t> ticks;
    const RunResult run = run_ga(problem, p, config, rng,
                                 [&](std::uint64_t t, const Population& pop) {
                                     CHECK(pop.lambda() == 4);
                                     CHECK(pop.sorted());
                                     ticks.push_back(t);
                                 });
    REQUIRE(ticks.size() == run.generations + 1);
    for (std::size_t i = 0; i < ticks.size(); ++i) CHECK(ticks[i] == i);
}

TEST_CASE("locked run hits at the same time as the plain run") {
    const RoyalRoad problem(4, 2);
    const NeighborhoodSpec ball = NeighborhoodSpec::hamming(2);
    const LevelPartition p = merged_local_optima_partition(problem, ball);
    GAConfig config = small_config(5, 0.25);
    config.crossover = CrossoverOp::single_point(0.5);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RandomStream a(seed), b(seed);
        const RunResult plain = run_ga(problem, p, config, a);
        const RunResult locked = run_ga_locked(problem, p, config, b);
        REQUIRE_FALSE(plain.censored);
        CHECK(plain.hitting_time == locked.hitting_time);
        CHECK(plain.generations == locked.generations);
    }
}

TEST_CASE("lock_target flag routes run_ga through the locked variant") {
    const RoyalRoad problem(4, 2);
    const LevelPartition p = canonical_partition(problem);
    GAConfig config = small_config(4, 0.25);
    config.lock_target = true;
    RandomStream a(8), b(8);
    const RunResult flagged = run_ga(problem, p, config, a);
    const RunResult direct = run_ga_locked(problem, p, config, b);
    CHECK(flagged.hitting_time == direct.hitting_time);
    CHECK(flagged.best_level_trace == direct.best_level_trace);
}

TEST_CASE("locked selection prefers the target rank without spending draws") {
    Population pop = test::leveled_population({9, 4, 2}, {1, 2, 3});
    const int target = 9;
    RandomStream rng(1);
    const std::uint64_t before = rng.next_u64();
    RandomStream replay(1);
    CHECK(select_locked(SelectionOp::tournament(3), pop, target, replay) == 1);
    CHECK(replay.next_u64() == before);  // nothing consumed on the locked path

    // without a target member it behaves like the plain operator
    RandomStream x(4), y(4);
    const SelectionOp sel = SelectionOp::tournament(3);
    CHECK(select_locked(sel, pop, 99, x) == sel.select(pop, y));
}

TEST_CASE("locked crossover copies target parents through") {
    Individual a, b;
    a.genotype = BitString::from_string("1111");
    a.level = 5;
    b.genotype = BitString::from_string("0000");
    b.level = 2;
    RandomStream rng(6);
    const CrossoverOp op = CrossoverOp::single_point(1.0);
    CHECK(crossover_locked(op, a, b, 5, rng) == a.genotype);
    CHECK(crossover_locked(op, b, a, 5, rng) == a.genotype);
    const BitString z = crossover_locked(op, a, b, 9, rng);  // no lock: real splice
    CHECK(z.size() == 4);
}

TEST_CASE("config validation") {
    const OneMax problem(4);
    const LevelPartition p = canonical_partition(problem);
    RandomStream rng(1);
    GAConfig config = small_config(1, 0.1);
    CHECK_THROWS_AS((void)run_ga(problem, p, config, rng), std::invalid_argument);
    config = small_config(4, 0.1);
    config.selection = SelectionOp::mu_lambda(8);  // mu > lambda
    CHECK_THROWS_AS((void)run_ga(problem, p, config, rng), std::invalid_argument);
}

TEST_SUITE_END();
