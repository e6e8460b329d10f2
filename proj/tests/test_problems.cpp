#include <doctest.h>

#include <array>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "levelga/neighborhood.hpp"
#include "levelga/problems/onemax.hpp"
#include "levelga/problems/royal_road.hpp"
#include "levelga/problems/toy_npo.hpp"
#include "levelga/problems/triangle_vertex_cover.hpp"

using namespace levelga;

namespace {

// Independently derived per-triangle objective, indexed by the three edge
// bits read as a number: exactly the two all-same choices select all three
// vertices.
constexpr std::array<Fitness, 8> kTriangleFitness = {0, 1, 1, 1, 1, 1, 1, 0};

}  // namespace

TEST_SUITE_BEGIN("problems");

TEST_CASE("onemax and leadingones objectives") {
    const OneMax om(6);
    CHECK(om.objective(BitString::from_string("010110")) == 3);
    CHECK(om.objective_values().size() == 7);
    CHECK(om.all_feasible());

    const LeadingOnes lo(6);
    CHECK(lo.objective(BitString::from_string("111010")) == 3);
    CHECK(lo.objective(BitString::from_string("011111")) == 0);
    CHECK(lo.objective(BitString::from_string("111111")) == 6);
}

TEST_CASE("royal road counts complete blocks") {
    const RoyalRoad rr(8, 2);
    CHECK(rr.blocks() == 4);
    CHECK(rr.objective(BitString::from_string("11111111")) == 4);
    CHECK(rr.objective(BitString::from_string("11011100")) == 2);
    CHECK(rr.objective(BitString::from_string("01010101")) == 0);
    CHECK(rr.objective(BitString::from_string("00000011")) == 1);
    CHECK(rr.objective_values() == std::vector<Fitness>{0, 1, 2, 3, 4});
    CHECK(rr.neighborhood_radius() == 2);

    const RoyalRoad rr3(9, 3);
    CHECK(rr3.objective(BitString::from_string("111011111")) == 2);
    CHECK_THROWS_AS((void)RoyalRoad(7, 2), std::invalid_argument);
}

TEST_CASE("triangle cover objective decomposes per triangle") {
    const TriangleVertexCover one(1);
    for (std::uint64_t x = 0; x < 8; ++x)
        CHECK(one.objective(BitString::from_index(x, 3)) == kTriangleFitness[x]);

    const TriangleVertexCover two(2);
    CHECK(two.dimension() == 6);
    for (std::uint64_t x = 0; x < 64; ++x) {
        const Fitness expected = kTriangleFitness[x >> 3] + kTriangleFitness[x & 7];
        CHECK(two.objective(BitString::from_index(x, 6)) == expected);
    }
    CHECK(two.objective_values() == std::vector<Fitness>{0, 1, 2});
}

TEST_CASE("triangle cover vertices stay inside their triangle") {
    const TriangleVertexCover vcp(2);
    const auto cover = vcp.cover(BitString::from_string("000000"));
    CHECK(cover == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    // an optimal choice for the first triangle, pessimal for the second
    const auto mixed = vcp.cover(BitString::from_string("100111"));
    CHECK(mixed.size() == 5);
}

TEST_CASE("optimal string and cover counts") {
    for (std::size_t kappa = 1; kappa <= 3; ++kappa) {
        const VcpOptimaCount counts = count_triangle_cover_optima(kappa);
        std::uint64_t strings = 1, covers = 1;
        for (std::size_t i = 0; i < kappa; ++i) {
            strings *= 6;
            covers *= 3;
        }
        CHECK(counts.optimal_strings == strings);
        CHECK(counts.optimal_covers == covers);
    }
}

TEST_CASE("royal road has a unique local optimum at its block radius") {
    const RoyalRoad rr(8, 2);
    const NeighborhoodSpec ball = NeighborhoodSpec::hamming(2);
    std::size_t optima = 0;
    for (std::uint64_t i = 0; i < 256; ++i) {
        const BitString x = BitString::from_index(i, 8);
        if (is_local_optimum(rr, ball, x)) {
            ++optima;
            CHECK(x == BitString::all_ones(8));
        }
    }
    CHECK(optima == 1);
    // radius 1 is below the block length: from all-zeros no single flip
    // completes a block, so the worst string is already locally optimal
    CHECK(is_local_optimum(rr, NeighborhoodSpec::hamming(1), BitString(8)));
}

TEST_CASE("triangle cover local optima are global") {
    for (std::size_t kappa : {1, 2, 3}) {
        const TriangleVertexCover vcp(kappa);
        const NeighborhoodSpec ball = NeighborhoodSpec::hamming(1);
        const auto best = static_cast<Fitness>(kappa);
        std::uint64_t optima = 0;
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << (3 * kappa)); ++i) {
            const BitString x = BitString::from_index(i, 3 * kappa);
            if (is_local_optimum(vcp, ball, x)) {
                CHECK(vcp.objective(x) == best);
                ++optima;
            }
        }
        CHECK(optima == count_triangle_cover_optima(kappa).optimal_strings);
    }
}

TEST_CASE("local search improves strictly and stops at a local optimum") {
    const ToyNpo toy = ToyNpo::example_with_infeasible();
    const NeighborhoodSpec ball = NeighborhoodSpec::hamming(1);
    for (std::uint64_t i = 0; i < 16; ++i) {
        const BitString x = BitString::from_index(i, 4);
        if (!toy.is_feasible(x)) continue;
        const LocalSearchResult res = local_search(toy, ball, x);
        CHECK(is_local_optimum(toy, ball, res.optimum));
        CHECK(toy.objective(res.optimum) >= toy.objective(x));
        CHECK(res.moves <= 4);
        if (res.moves == 0) CHECK(res.optimum == x);
    }
    // the deceptive point is already locally optimal
    CHECK(local_search(toy, ball, BitString::from_string("0000")).moves == 0);
}

TEST_CASE("toy instance tables round-trip through text") {
    const ToyNpo original = ToyNpo::example_with_infeasible();
    std::istringstream in(original.to_text());
    const ToyNpo parsed = ToyNpo::parse(in, "toy:copy");
    CHECK(parsed.dimension() == original.dimension());
    CHECK(parsed.neighborhood_radius() == original.neighborhood_radius());
    CHECK(parsed.fallback_feasible() == original.fallback_feasible());
    for (std::uint64_t i = 0; i < 16; ++i) {
        const BitString x = BitString::from_index(i, 4);
        REQUIRE(parsed.is_feasible(x) == original.is_feasible(x));
        if (parsed.is_feasible(x)) CHECK(parsed.objective(x) == original.objective(x));
    }
}

TEST_CASE("shipped sample instance matches the built-in deceptive landscape") {
    const std::filesystem::path path =
        std::filesystem::path(LEVELGA_SOURCE_DIR) / "data" / "deceptive4.toy";
    const ToyNpo file = ToyNpo::from_file(path);
    const ToyNpo builtin = ToyNpo::example_with_infeasible();
    CHECK(file.dimension() == 4);
    CHECK(file.fallback_feasible() == builtin.fallback_feasible());
    for (std::uint64_t i = 0; i < 16; ++i) {
        const BitString x = BitString::from_index(i, 4);
        REQUIRE(file.is_feasible(x) == builtin.is_feasible(x));
        if (file.is_feasible(x)) CHECK(file.objective(x) == builtin.objective(x));
    }
}

TEST_CASE("toy parser rejects malformed input") {
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return ToyNpo::parse(in, "toy:bad");
    };
    CHECK_THROWS(parse(""));                       // no dimension
    CHECK_THROWS(parse("13\n"));                   // dimension too large
    CHECK_THROWS(parse("1\n1 1\n"));               // missing second table line
    CHECK_THROWS(parse("1\n1 1\n2 1\n"));          // feasibility flag out of range
    CHECK_THROWS(parse("1\n1 0\n1 1\n"));          // feasible objective below 1
    CHECK_THROWS(parse("1\n1 1\n1 1\nwhat 3\n"));  // unknown directive
    CHECK_THROWS(parse("1\n0 0\n1 1\nfallback 0\n"));  // infeasible fallback
    CHECK_NOTHROW(parse("# comment\n1\n1 1   # inline\n1 2\nradius 1\n"));
}

TEST_CASE("toy infeasible strings reject objective queries") {
    const ToyNpo toy = ToyNpo::example_three_bit();
    CHECK_FALSE(toy.all_feasible());
    CHECK_THROWS_AS((void)toy.objective(BitString::from_string("101")), std::logic_error);
    CHECK(fitness(toy, BitString::from_string("101")) == 0);  // penalty floor
    CHECK(fitness(toy, BitString::from_string("111")) == 4);
}

TEST_SUITE_END();
