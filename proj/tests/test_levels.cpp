#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "levelga/neighborhood.hpp"
#include "levelga/partition.hpp"
#include "levelga/population.hpp"
#include "levelga/problems/onemax.hpp"
#include "levelga/problems/royal_road.hpp"
#include "levelga/problems/toy_npo.hpp"
#include "levelga/problems/triangle_vertex_cover.hpp"
#include "support.hpp"

using namespace levelga;

namespace {

ToyNpo constant_toy() {
    return ToyNpo(3, std::vector<bool>(8, true), std::vector<Fitness>(8, 1));
}

}  // namespace

TEST_SUITE_BEGIN("levels");

TEST_CASE("canonical partition sizes") {
    const OneMax onemax(8);
    CHECK(canonical_partition(onemax).m() == 8);
    CHECK(canonical_partition(onemax).num_levels() == 9);

    const RoyalRoad rr(8, 2);
    const LevelPartition p = canonical_partition(rr);
    CHECK(p.m() == 4);
    CHECK(p.target_level() == 5);
    CHECK(p.level_of(rr, BitString::from_string("11111111")) == 5);
    CHECK(p.level_of(rr, BitString::from_string("11011100")) == 3);  // 2 complete blocks
    CHECK(p.level_of(rr, BitString::from_string("01010101")) == 1);
}

TEST_CASE("canonical partition rejects constant fitness") {
    const ToyNpo flat = constant_toy();
    CHECK_THROWS_AS((void)canonical_partition(flat), std::invalid_argument);
}

TEST_CASE("canonical partition rejects bad value lists") {
    const OneMax onemax(4);
    CHECK_THROWS_AS((void)canonical_partition(onemax, {3, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)canonical_partition(onemax, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("merged partition equals canonical when the optimum is the only LO") {
    const RoyalRoad rr(8, 2);
    const NeighborhoodSpec ball = NeighborhoodSpec::hamming(2);
    const LevelPartition merged = merged_local_optima_partition(rr, ball);
    const LevelPartition canon = canonical_partition(rr);
    CHECK(merged.m() == canon.m());
    for (std::uint64_t i = 0; i < 256; ++i) {
        const BitString x = BitString::from_index(i, 8);
        CHECK(merged.level_of(rr, x) == canon.level_of(rr, x));
    }
}

TEST_CASE("merged partition pools the optimal strings of disjoint triangles") {
    const TriangleVertexCover vcp(1);
    const LevelPartition p = merged_local_optima_partition(vcp, NeighborhoodSpec::hamming(1));
    CHECK(p.m() == 1);
    std::size_t at_target = 0;
    for (std::uint64_t i = 0; i < 8; ++i) {
        const BitString x = BitString::from_index(i, 3);
        const int level = p.level_of(vcp, x);
        if (level == p.target_level()) ++at_target;
        else CHECK(level == 1);
    }
    CHECK(at_target == 6);
}

TEST_CASE("merged partition needs a fully feasible cube and a non-LO point") {
    const ToyNpo holes = ToyNpo::example_with_infeasible();
    CHECK_THROWS_AS(
        (void)merged_local_optima_partition(holes, NeighborhoodSpec::hamming(1)),
        std::invalid_argument);
    const ToyNpo flat = constant_toy();
    CHECK_THROWS_AS(
        (void)merged_local_optima_partition(flat, NeighborhoodSpec::hamming(1)),
        std::invalid_argument);
}

TEST_CASE("general partition stratifies the three-bit instance") {
    const ToyNpo toy = ToyNpo::example_three_bit();
    const LevelPartition p = general_partition(toy, NeighborhoodSpec::hamming(1));
    CHECK(p.m() == 4);
    const auto level = [&](const char* s) {
        return p.level_of(toy, BitString::from_string(s));
    };
    CHECK(level("101") == 1);  // infeasible floor
    CHECK(level("110") == 1);
    CHECK(level("000") == 2);
    CHECK(level("001") == 3);
    CHECK(level("010") == 3);
    CHECK(level("011") == 4);
    CHECK(level("111") == 5);  // global optimum
    CHECK(level("100") == 5);  // shielded local optimum, same target level
}

TEST_CASE("general partition with only locally optimal feasible points") {
    const ToyNpo toy = ToyNpo::example_isolated_feasible();
    const LevelPartition p = general_partition(toy, NeighborhoodSpec::hamming(1));
    CHECK(p.m() == 1);
    CHECK(p.level_of(toy, BitString::from_string("000")) == 2);
    CHECK(p.level_of(toy, BitString::from_string("111")) == 2);
    CHECK(p.level_of(toy, BitString::from_string("001")) == 1);
}

TEST_CASE("sort_population ranks best-first and assigns levels") {
    const OneMax onemax(4);
    const LevelPartition p = canonical_partition(onemax);
    std::vector<Individual> members;
    for (const char* s : {"0011", "1111", "0000", "0111", "0001"}) {
        Individual ind;
        ind.genotype = BitString::from_string(s);
        ind.fitness = fitness(onemax, ind.genotype);
        members.push_back(std::move(ind));
    }
    const Population pop = sort_population(Population(std::move(members)), p);
    CHECK(pop.sorted());
    CHECK(pop.at_rank(1).fitness == 4);
    CHECK(pop.at_rank(1).level == 5);
    CHECK(pop.at_rank(2).fitness == 3);
    CHECK(pop.at_rank(5).fitness == 0);
    CHECK(pop.at_rank(5).level == 1);
    for (std::size_t r = 1; r < pop.lambda(); ++r)
        CHECK(pop.at_rank(r).fitness >= pop.at_rank(r + 1).fitness);
}

TEST_CASE("gamma_ranked uses the ceiling rank") {
    const Population pop = test::distinct_levels(8);
    CHECK(gamma_ranked(pop, 1.0 / 8).level == 8);    // rank 1
    CHECK(gamma_ranked(pop, 0.126).level == 7);      // rank 2
    CHECK(gamma_ranked(pop, 1.0).level == 1);        // rank 8
    CHECK(gamma_ranked(pop, 0.5).level == 5);        // rank 4
}

TEST_SUITE_END();
