#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "levelga/bitstring.hpp"
#include "levelga/problem.hpp"
#include "levelga/random.hpp"

namespace levelga {

/// Binary recombination operator. Variants:
///  - single_point(pc): with probability pc splice both parents at a uniform
///    cut in {1..n-1}, otherwise copy them; the single-offspring form then
///    returns one of the two results uniformly;
///  - pass_through(pc, inner): with probability 1-pc return one parent
///    uniformly, otherwise delegate to inner;
///  - two_to_one(inner): run inner's two-offspring form and keep one of the
///    pair uniformly.
class CrossoverOp {
public:
    enum class Kind { SinglePoint, PassThrough, TwoToOne };

    static CrossoverOp single_point(double pc);
    static CrossoverOp pass_through(double pc, CrossoverOp inner);
    static CrossoverOp two_to_one(CrossoverOp inner);

    Kind kind() const { return kind_; }
    double pc() const { return pc_; }
    const CrossoverOp* inner() const { return inner_.get(); }
    std::string describe() const;
    /// Crossover probability shown in result tables.
    double rate() const;

    /// True when the operator has a two-offspring form.
    bool has_pair_form() const;

    BitString apply(const BitString& x, const BitString& y, RandomStream& rng) const;
    std::pair<BitString, BitString> apply_pair(const BitString& x, const BitString& y,
                                               RandomStream& rng) const;

    /// Exact single-offspring outcome distribution for one parent pair.
    std::vector<std::pair<BitString, double>> outcome_distribution(const BitString& x,
                                                                   const BitString& y) const;
    /// Exact two-offspring outcome distribution (pair-form operators only).
    std::vector<std::pair<std::pair<BitString, BitString>, double>> pair_outcome_distribution(
        const BitString& x, const BitString& y) const;

private:
    CrossoverOp(Kind kind, double pc, std::shared_ptr<const CrossoverOp> inner)
        : kind_(kind), pc_(pc), inner_(std::move(inner)) {}

    Kind kind_;
    double pc_;
    std::shared_ptr<const CrossoverOp> inner_;
};

struct EpsEstimate {
    double value = 0.0;  // observed success fraction
    double lo = 0.0;     // 95% Wilson interval
    double hi = 0.0;
    std::size_t trials = 0;
};

using PairSampler = std::function<std::pair<BitString, BitString>(RandomStream&)>;

/// Parents drawn uniformly and independently from {0,1}^n.
PairSampler uniform_pair_sampler(std::size_t n);
/// Parents with identical fitness: x uniform, y a uniform reshuffle of x's
/// bits (preserves any ones-count-determined objective).
PairSampler shuffled_pair_sampler(std::size_t n);

/// Success = the offspring is at least as fit as the better parent; for
/// pair-form operators the better of the two offspring is compared.
EpsEstimate estimate_eps0(const CrossoverOp& op, const Problem& problem,
                          const PairSampler& sampler, std::size_t trials, RandomStream& rng);

/// Success = equal-fitness parents reproduce their fitness exactly, and
/// unequal-fitness parents yield an offspring strictly better than the worse
/// parent.
EpsEstimate estimate_eps1(const CrossoverOp& op, const Problem& problem,
                          const PairSampler& sampler, std::size_t trials, RandomStream& rng);

/// Exact worst case of the estimate_eps0 success probability over all parent
/// pairs, by enumeration. dimension <= 10.
double exact_eps0(const CrossoverOp& op, const Problem& problem);
/// Exact worst case of the estimate_eps1 success probability.
double exact_eps1(const CrossoverOp& op, const Problem& problem);

}  // namespace levelga
