#include "levelga/mutation.hpp"

#include <cmath>
#include <stdexcept>

namespace levelga {

MutationOp MutationOp::bitwise(double pm) {
    if (!(pm >= 0.0 && pm <= 1.0)) throw std::invalid_argument("bitwise: pm must be in [0, 1]");
    return MutationOp(Kind::Bitwise, pm, nullptr);
}

MutationOp MutationOp::neighborhood_uniform() {
    return MutationOp(Kind::NeighborhoodUniform, 0.0, nullptr);
}

MutationOp MutationOp::repair_wrapped(MutationOp inner) {
    if (inner.kind_ == Kind::RepairWrapped)
        throw std::invalid_argument("repair_wrapped: wrapper cannot nest");
    return MutationOp(Kind::RepairWrapped, 0.0,
                      std::make_shared<const MutationOp>(std::move(inner)));
}

std::string MutationOp::describe() const {
    switch (kind_) {
        case Kind::Bitwise: return "bitwise(pm=" + std::to_string(pm_) + ")";
        case Kind::NeighborhoodUniform: return "neighborhood_uniform";
        case Kind::RepairWrapped: return "repair(" + inner_->describe() + ")";
    }
    return "?";
}

double MutationOp::rate() const {
    if (kind_ == Kind::Bitwise) return pm_;
    if (kind_ == Kind::RepairWrapped) return inner_->rate();
    return 0.0;
}

BitString MutationOp::apply(const Problem& problem, const BitString& x,
                            RandomStream& rng) const {
    if (x.size() != problem.dimension())
        throw std::invalid_argument("mutate: genotype dimension does not match problem");
    switch (kind_) {
        case Kind::Bitwise: {
            BitString y = x;
            for (std::size_t i = 0; i < y.size(); ++i)
                if (rng.bernoulli(pm_)) y.flip(i);
            return y;
        }
        case Kind::NeighborhoodUniform: {
            if (!problem.is_feasible(x)) {
                auto fb = problem.fallback_feasible();
                if (!fb)
                    throw std::logic_error(
                        "mutate: infeasible input and no designated feasible point");
                return *fb;
            }
            auto nbrs = problem.native_neighbors(x);
            if (nbrs.empty()) {
                auto fb = problem.fallback_feasible();
                if (!fb)
                    throw std::logic_error(
                        "mutate: empty neighborhood and no designated feasible point");
                return *fb;
            }
            return nbrs[rng.uniform_index(nbrs.size())];
        }
        case Kind::RepairWrapped: {
            BitString y = inner_->apply(problem, x, rng);
            if (problem.is_feasible(y)) return y;
            auto fb = problem.fallback_feasible();
            if (!fb)
                throw std::logic_error("mutate: repair needs a designated feasible point");
            return *fb;
        }
    }
    throw std::logic_error("mutate: unknown kind");
}

double bitwise_mutation_prob(double pm, const BitString& x, const BitString& y) {
    if (!(pm >= 0.0 && pm <= 1.0))
        throw std::invalid_argument("bitwise_mutation_prob: pm must be in [0, 1]");
    const std::size_t n = x.size();
    const std::size_t d = hamming_distance(x, y);  // also checks dimensions
    if (pm == 0.0) return d == 0 ? 1.0 : 0.0;
    if (pm == 1.0) return d == n ? 1.0 : 0.0;
    const double log_p =
        static_cast<double>(d) * std::log(pm) + static_cast<double>(n - d) * std::log1p(-pm);
    return std::exp(log_p);
}

}  // namespace levelga
