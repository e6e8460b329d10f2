#pragma once

#include <functional>
#include <vector>

#include "levelga/bitstring.hpp"
#include "levelga/neighborhood.hpp"
#include "levelga/problem.hpp"

namespace levelga {

/// Ordered partition A_1 < ... < A_{m+1} of the search space. Level m+1 is
/// the target. Membership queries are lazy: classifying a string never
/// requires touching the rest of the cube, so partitions stay usable at
/// dimensions where full enumeration is impossible.
///
/// Factories capture the problem (and neighborhood) by reference; the
/// problem must outlive the partition.
class LevelPartition {
public:
    enum class Kind { Canonical, MergedLocalOptima, InfeasibleFirst };

    using Classifier = std::function<int(const BitString&, Fitness)>;

    LevelPartition(Kind kind, int m, Classifier classify);

    Kind kind() const { return kind_; }
    /// Number of non-target levels; the partition has m() + 1 levels total.
    int m() const { return m_; }
    int num_levels() const { return m_ + 1; }
    int target_level() const { return m_ + 1; }

    /// Level of x given its already-computed level-partition fitness
    /// (0 for infeasible strings, objective otherwise).
    int level_of(const BitString& x, Fitness fit) const;
    /// Convenience form that computes the fitness first.
    int level_of(const Problem& problem, const BitString& x) const;

private:
    Kind kind_;
    int m_;
    Classifier classify_;
};

/// One level per attained fitness value. `values` must list every fitness
/// value the instance attains (including 0 when infeasible strings exist),
/// strictly ascending, at least two values.
LevelPartition canonical_partition(const Problem& problem, std::vector<Fitness> values);
/// Same, with values taken from the problem's closed-form list.
LevelPartition canonical_partition(const Problem& problem);

/// Requires a fully feasible cube. Levels 1..m stratify non-locally-optimal
/// strings by fitness; level m+1 collects every local optimum regardless of
/// its fitness. `non_lo_values` lists the fitness values attained outside the
/// local-optima set, ascending.
LevelPartition merged_local_optima_partition(const Problem& problem, const NeighborhoodSpec& nbhd,
                                             std::vector<Fitness> non_lo_values);
/// Same, deriving non_lo_values automatically: from the problem's closed-form
/// structure when local optima coincide with the top fitness class, otherwise
/// by exhaustive enumeration (dimension <= 20).
LevelPartition merged_local_optima_partition(const Problem& problem, const NeighborhoodSpec& nbhd);

/// General instance layout: level 1 holds all infeasible strings, levels
/// 2..m stratify feasible non-locally-optimal strings by objective, level
/// m+1 collects the local optima. `feasible_non_lo_values` ascending.
LevelPartition general_partition(const Problem& problem, const NeighborhoodSpec& nbhd,
                                 std::vector<Fitness> feasible_non_lo_values);
/// Same, enumerating the value list exhaustively (dimension <= 20).
LevelPartition general_partition(const Problem& problem, const NeighborhoodSpec& nbhd);

}  // namespace levelga
