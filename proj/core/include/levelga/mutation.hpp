#pragma once

#include <memory>
#include <string>

#include "levelga/bitstring.hpp"
#include "levelga/problem.hpp"
#include "levelga/random.hpp"

namespace levelga {

/// Unary variation operator. Variants:
///  - bitwise(pm): flip each bit independently with probability pm;
///  - neighborhood_uniform(): uniform over the problem's native neighborhood,
///    falling back to the designated feasible point when the input is
///    infeasible or has no neighbors;
///  - repair_wrapped(inner): run inner, substitute the designated feasible
///    point whenever the output is infeasible.
class MutationOp {
public:
    enum class Kind { Bitwise, NeighborhoodUniform, RepairWrapped };

    static MutationOp bitwise(double pm);
    static MutationOp neighborhood_uniform();
    static MutationOp repair_wrapped(MutationOp inner);

    Kind kind() const { return kind_; }
    double pm() const { return pm_; }
    const MutationOp* inner() const { return inner_.get(); }
    std::string describe() const;
    /// Mutation rate shown in result tables (the inner rate for the repair
    /// wrapper, 0 for neighborhood sampling).
    double rate() const;

    BitString apply(const Problem& problem, const BitString& x, RandomStream& rng) const;

private:
    MutationOp(Kind kind, double pm, std::shared_ptr<const MutationOp> inner)
        : kind_(kind), pm_(pm), inner_(std::move(inner)) {}

    Kind kind_;
    double pm_;
    std::shared_ptr<const MutationOp> inner_;
};

/// Exact probability that bitwise mutation at rate pm turns x into y:
/// pm^d * (1-pm)^(n-d) with d the Hamming distance. Accumulated in log space
/// so large n cannot underflow intermediate factors.
double bitwise_mutation_prob(double pm, const BitString& x, const BitString& y);

}  // namespace levelga
