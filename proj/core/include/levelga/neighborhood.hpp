#pragma once

#include <cstddef>
#include <vector>

#include "levelga/bitstring.hpp"
#include "levelga/problem.hpp"

namespace levelga {

/// All strings y != x with hamming_distance(x, y) <= r, feasibility ignored.
/// Enumeration order is deterministic: distance 1 first, then 2, ..., with
/// flipped position sets in lexicographic order at each distance.
std::vector<BitString> hamming_ball(const BitString& x, std::size_t r);

/// hamming_ball filtered to feasible strings of the given problem.
std::vector<BitString> hamming_neighborhood(const Problem& problem, const BitString& x,
                                            std::size_t r);

/// Which neighborhood structure an operator or partition should consult.
/// Both choices yield neighborhoods bounded by a constant number of bit
/// flips per string.
class NeighborhoodSpec {
public:
    enum class Kind { HammingRadius, ProblemNative };

    static NeighborhoodSpec hamming(std::size_t radius);
    static NeighborhoodSpec native();

    Kind kind() const { return kind_; }
    std::vector<BitString> neighbors(const Problem& problem, const BitString& x) const;
    /// Flip bound K: the declared radius, or the problem's native radius.
    std::size_t flip_bound(const Problem& problem) const;

private:
    NeighborhoodSpec(Kind kind, std::size_t radius) : kind_(kind), radius_(radius) {}
    Kind kind_;
    std::size_t radius_;
};

/// True iff no neighbor of x improves on it. Only defined on feasible x.
bool is_local_optimum(const Problem& problem, const NeighborhoodSpec& nbhd, const BitString& x);

struct LocalSearchResult {
    BitString optimum;
    std::size_t moves = 0;
};

/// First-improvement hill climber: scan neighbors in enumeration order, take
/// the first strict improvement, repeat until locally optimal. Each move
/// strictly increases the objective, so the move count never exceeds the
/// number of distinct non-locally-optimal objective values.
LocalSearchResult local_search(const Problem& problem, const NeighborhoodSpec& nbhd,
                               const BitString& start);

}  // namespace levelga
