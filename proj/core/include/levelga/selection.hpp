#pragma once

#include <cstddef>
#include <string>

#include "levelga/population.hpp"
#include "levelga/random.hpp"

namespace levelga {

/// Rank-based selection over a sorted population. select() returns a 1-based
/// rank; selection_prob() is the exact probability of that rank winning a
/// single selection, and the two always describe the same distribution.
class SelectionOp {
public:
    enum class Kind { Tournament, MuLambda, ExpRanking };

    /// k independent uniform draws with replacement; the fittest drawn member
    /// wins, fitness ties going to the lowest rank.
    static SelectionOp tournament(int k);
    /// Uniform over ranks 1..mu. Boundary ties are resolved by the sorted
    /// order itself: exactly the first mu ranks are eligible.
    static SelectionOp mu_lambda(int mu);
    /// Continuous exponential ranking density eta*e^(eta*(1-g))/(e^eta - 1)
    /// integrated over each rank's sub-interval ((i-1)/lambda, i/lambda].
    static SelectionOp exp_ranking(double eta);

    Kind kind() const { return kind_; }
    int k() const { return k_; }
    int mu() const { return mu_; }
    double eta() const { return eta_; }
    std::string describe() const;
    /// Value of the operator's single numeric parameter (k, mu or eta), as it
    /// should appear in result tables.
    double parameter() const;

    std::size_t select(const Population& pop, RandomStream& rng) const;
    double selection_prob(const Population& pop, std::size_t rank) const;

private:
    SelectionOp(Kind kind, int k, int mu, double eta) : kind_(kind), k_(k), mu_(mu), eta_(eta) {}

    Kind kind_;
    int k_ = 0;
    int mu_ = 0;
    double eta_ = 0.0;
};

/// Total selection probability of the levels at or above the level of the
/// gamma-ranked member: beta(gamma, P). Requires a population sorted (and
/// leveled) by sort_population.
double cumulative_beta(const SelectionOp& sel, const Population& pop, double gamma);

/// Monte Carlo counterpart of cumulative_beta: fraction of `draws` selections
/// that land in those same levels.
double estimate_beta(const SelectionOp& sel, const Population& pop, double gamma,
                     std::size_t draws, RandomStream& rng);

}  // namespace levelga
