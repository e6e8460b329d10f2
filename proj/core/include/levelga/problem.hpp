#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levelga/bitstring.hpp"

namespace levelga {

using Fitness = std::int64_t;

/// Pseudo-boolean optimization instance over {0,1}^n with an explicit
/// feasible region. objective() is only defined on feasible strings; the
/// fitness() wrapper below maps infeasible strings to 0, which sits strictly
/// below every feasible objective whenever infeasible strings exist (such
/// instances must keep objective >= 1 on the feasible set).
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::size_t dimension() const = 0;
    virtual bool is_feasible(const BitString& x) const = 0;
    virtual Fitness objective(const BitString& x) const = 0;  // pre: is_feasible(x)
    virtual std::string name() const = 0;

    /// True when the feasible region is the whole cube.
    virtual bool all_feasible() const { return true; }

    /// Designated feasible point substituted when an operator has nowhere
    /// else to go (empty neighborhood, infeasible mutation output under the
    /// repair wrapper).
    virtual std::optional<BitString> fallback_feasible() const { return std::nullopt; }

    /// Every objective value the instance can attain on feasible strings,
    /// strictly ascending. Known in closed form for the built-in families.
    virtual std::vector<Fitness> objective_values() const = 0;

    /// Instance-defined neighborhood; defaults to the feasible Hamming ball
    /// of radius neighborhood_radius().
    virtual std::vector<BitString> native_neighbors(const BitString& x) const;
    virtual std::size_t neighborhood_radius() const { return 1; }

    /// True when, under any neighborhood of radius >= the given one, the set
    /// of local optima is exactly the top fitness class. Lets level
    /// partitions that single out local optima classify by fitness alone.
    virtual bool local_optima_are_argmax(std::size_t /*radius*/) const { return false; }
};

/// Level-partition fitness: objective for feasible strings, 0 otherwise.
Fitness fitness(const Problem& problem, const BitString& x);

}  // namespace levelga
