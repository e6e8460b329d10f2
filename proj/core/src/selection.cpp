#include "levelga/selection.hpp"

#include <cmath>
#include <stdexcept>

namespace levelga {

namespace {

void require_sorted(const Population& pop, const char* what) {
    if (pop.lambda() == 0) throw std::invalid_argument(std::string(what) + ": empty population");
    if (!pop.sorted())
        throw std::logic_error(std::string(what) + ": population must be sorted first");
}

// Number of members that beat rank `r` in a tournament: strictly fitter ones
// plus equally fit ones at lower ranks (ties go to the lowest rank).
std::size_t tournament_beaters(const Population& pop, std::size_t r) {
    const auto& me = pop.at_rank(r);
    std::size_t b = 0;
    for (std::size_t j = 1; j <= pop.lambda(); ++j) {
        if (j == r) continue;
        const auto& other = pop.at_rank(j);
        if (other.fitness > me.fitness || (other.fitness == me.fitness && j < r)) ++b;
    }
    return b;
}

}  // namespace

SelectionOp SelectionOp::tournament(int k) {
    if (k < 1) throw std::invalid_argument("tournament: k must be >= 1");
    return SelectionOp(Kind::Tournament, k, 0, 0.0);
}

SelectionOp SelectionOp::mu_lambda(int mu) {
    if (mu < 1) throw std::invalid_argument("mu_lambda: mu must be >= 1");
    return SelectionOp(Kind::MuLambda, 0, mu, 0.0);
}

SelectionOp SelectionOp::exp_ranking(double eta) {
    if (!(eta > 0.0)) throw std::invalid_argument("exp_ranking: eta must be > 0");
    return SelectionOp(Kind::ExpRanking, 0, 0, eta);
}

std::string SelectionOp::describe() const {
    switch (kind_) {
        case Kind::Tournament: return "tournament(k=" + std::to_string(k_) + ")";
        case Kind::MuLambda: return "mu_lambda(mu=" + std::to_string(mu_) + ")";
        case Kind::ExpRanking: return "exp_ranking(eta=" + std::to_string(eta_) + ")";
    }
    return "?";
}

double SelectionOp::parameter() const {
    switch (kind_) {
        case Kind::Tournament: return k_;
        case Kind::MuLambda: return mu_;
        case Kind::ExpRanking: return eta_;
    }
    return 0.0;
}

std::size_t SelectionOp::select(const Population& pop, RandomStream& rng) const {
    require_sorted(pop, "select");
    const std::size_t lambda = pop.lambda();
    switch (kind_) {
        case Kind::Tournament: {
            std::size_t best = rng.uniform_index(lambda) + 1;
            for (int d = 1; d < k_; ++d) {
                std::size_t cand = rng.uniform_index(lambda) + 1;
                const auto& c = pop.at_rank(cand);
                const auto& b = pop.at_rank(best);
                if (c.fitness > b.fitness || (c.fitness == b.fitness && cand < best)) best = cand;
            }
            return best;
        }
        case Kind::MuLambda: {
            if (static_cast<std::size_t>(mu_) > lambda)
                throw std::invalid_argument("select: mu exceeds population size");
            return rng.uniform_index(static_cast<std::size_t>(mu_)) + 1;
        }
        case Kind::ExpRanking: {
            // Invert the rank CDF by binary search; ranks are few enough that
            // precomputing nothing keeps the operator stateless.
            const double u = rng.uniform01();
            std::size_t lo = 1, hi = lambda;
            while (lo < hi) {
                const std::size_t mid = (lo + hi) / 2;
                const double cdf =
                    -std::expm1(-eta_ * (static_cast<double>(mid) / lambda)) / -std::expm1(-eta_);
                if (cdf >= u) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            return lo;
        }
    }
    throw std::logic_error("select: unknown kind");
}

double SelectionOp::selection_prob(const Population& pop, std::size_t rank) const {
    require_sorted(pop, "selection_prob");
    const std::size_t lambda = pop.lambda();
    if (rank < 1 || rank > lambda)
        throw std::invalid_argument("selection_prob: rank out of range");
    switch (kind_) {
        case Kind::Tournament: {
            const double b = static_cast<double>(tournament_beaters(pop, rank));
            const double l = static_cast<double>(lambda);
            // Wins iff drawn at least once and no beater is drawn.
            return std::pow((l - b) / l, k_) - std::pow((l - b - 1.0) / l, k_);
        }
        case Kind::MuLambda: {
            if (static_cast<std::size_t>(mu_) > lambda)
                throw std::invalid_argument("selection_prob: mu exceeds population size");
            return rank <= static_cast<std::size_t>(mu_) ? 1.0 / mu_ : 0.0;
        }
        case Kind::ExpRanking: {
            const double l = static_cast<double>(lambda);
            const double a = (static_cast<double>(rank) - 1.0) / l;
            const double b = static_cast<double>(rank) / l;
            // Integral of the density over ((rank-1)/lambda, rank/lambda],
            // with e^eta factored out of numerator and denominator.
            return (std::exp(-eta_ * a) - std::exp(-eta_ * b)) / -std::expm1(-eta_);
        }
    }
    throw std::logic_error("selection_prob: unknown kind");
}

double cumulative_beta(const SelectionOp& sel, const Population& pop, double gamma) {
    const Individual& pivot = gamma_ranked(pop, gamma);
    double beta = 0.0;
    for (std::size_t r = 1; r <= pop.lambda(); ++r)
        if (pop.at_rank(r).level >= pivot.level) beta += sel.selection_prob(pop, r);
    return beta;
}

double estimate_beta(const SelectionOp& sel, const Population& pop, double gamma,
                     std::size_t draws, RandomStream& rng) {
    if (draws == 0) throw std::invalid_argument("estimate_beta: draws must be >= 1");
    const Individual& pivot = gamma_ranked(pop, gamma);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < draws; ++i)
        if (pop.at_rank(sel.select(pop, rng)).level >= pivot.level) ++hits;
    return static_cast<double>(hits) / static_cast<double>(draws);
}

}  // namespace levelga
