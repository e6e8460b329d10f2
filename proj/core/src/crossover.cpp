#include "levelga/crossover.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace levelga {

namespace {

void require_same_size(const BitString& x, const BitString& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("crossover: parent dimensions differ");
    if (x.size() < 1) throw std::invalid_argument("crossover: empty parents");
}

BitString splice(const BitString& x, const BitString& y, std::size_t cut) {
    BitString z = x;
    for (std::size_t i = cut; i < y.size(); ++i) z.set(i, y.get(i));
    return z;
}

using Outcome = std::vector<std::pair<BitString, double>>;
using PairOutcome = std::vector<std::pair<std::pair<BitString, BitString>, double>>;

void add_mass(std::map<BitString, double>& acc, const BitString& s, double p) {
    if (p > 0.0) acc[s] += p;
}

}  // namespace

CrossoverOp CrossoverOp::single_point(double pc) {
    if (!(pc >= 0.0 && pc <= 1.0))
        throw std::invalid_argument("single_point: pc must be in [0, 1]");
    return CrossoverOp(Kind::SinglePoint, pc, nullptr);
}

CrossoverOp CrossoverOp::pass_through(double pc, CrossoverOp inner) {
    if (!(pc >= 0.0 && pc <= 1.0))
        throw std::invalid_argument("pass_through: pc must be in [0, 1]");
    return CrossoverOp(Kind::PassThrough, pc,
                       std::make_shared<const CrossoverOp>(std::move(inner)));
}

CrossoverOp CrossoverOp::two_to_one(CrossoverOp inner) {
    if (!inner.has_pair_form())
        throw std::invalid_argument("two_to_one: inner operator has no two-offspring form");
    return CrossoverOp(Kind::TwoToOne, 0.0,
                       std::make_shared<const CrossoverOp>(std::move(inner)));
}

std::string CrossoverOp::describe() const {
    switch (kind_) {
        case Kind::SinglePoint: return "single_point(pc=" + std::to_string(pc_) + ")";
        case Kind::PassThrough:
            return "pass_through(pc=" + std::to_string(pc_) + ", " + inner_->describe() + ")";
        case Kind::TwoToOne: return "two_to_one(" + inner_->describe() + ")";
    }
    return "?";
}

double CrossoverOp::rate() const {
    if (kind_ == Kind::TwoToOne) return inner_->rate();
    return pc_;
}

bool CrossoverOp::has_pair_form() const {
    switch (kind_) {
        case Kind::SinglePoint: return true;
        case Kind::PassThrough: return inner_->has_pair_form();
        case Kind::TwoToOne: return false;
    }
    return false;
}

std::pair<BitString, BitString> CrossoverOp::apply_pair(const BitString& x, const BitString& y,
                                                        RandomStream& rng) const {
    require_same_size(x, y);
    switch (kind_) {
        case Kind::SinglePoint: {
            if (pc_ > 0.0 && x.size() < 2)
                throw std::invalid_argument("single_point: splicing needs n >= 2");
            if (!rng.bernoulli(pc_)) return {x, y};
            const std::size_t cut = 1 + rng.uniform_index(x.size() - 1);
            return {splice(x, y, cut), splice(y, x, cut)};
        }
        case Kind::PassThrough: {
            if (!rng.bernoulli(pc_)) return {x, y};
            return inner_->apply_pair(x, y, rng);
        }
        case Kind::TwoToOne:
            throw std::logic_error("apply_pair: operator has no two-offspring form");
    }
    throw std::logic_error("apply_pair: unknown kind");
}

BitString CrossoverOp::apply(const BitString& x, const BitString& y, RandomStream& rng) const {
    require_same_size(x, y);
    switch (kind_) {
        case Kind::SinglePoint: {
            auto [u, v] = apply_pair(x, y, rng);
            return rng.bernoulli(0.5) ? std::move(v) : std::move(u);
        }
        case Kind::PassThrough: {
            if (!rng.bernoulli(pc_)) return rng.bernoulli(0.5) ? y : x;
            return inner_->apply(x, y, rng);
        }
        case Kind::TwoToOne: {
            auto [u, v] = inner_->apply_pair(x, y, rng);
            return rng.bernoulli(0.5) ? std::move(v) : std::move(u);
        }
    }
    throw std::logic_error("apply: unknown kind");
}

PairOutcome CrossoverOp::pair_outcome_distribution(const BitString& x, const BitString& y) const {
    require_same_size(x, y);
    switch (kind_) {
        case Kind::SinglePoint: {
            if (pc_ > 0.0 && x.size() < 2)
                throw std::invalid_argument("single_point: splicing needs n >= 2");
            PairOutcome out;
            std::map<std::pair<BitString, BitString>, double> acc;
            acc[{x, y}] += 1.0 - pc_;
            if (pc_ > 0.0) {
                const double per_cut = pc_ / static_cast<double>(x.size() - 1);
                for (std::size_t cut = 1; cut < x.size(); ++cut)
                    acc[{splice(x, y, cut), splice(y, x, cut)}] += per_cut;
            }
            for (auto& [pair, p] : acc)
                if (p > 0.0) out.emplace_back(pair, p);
            return out;
        }
        case Kind::PassThrough: {
            std::map<std::pair<BitString, BitString>, double> acc;
            acc[{x, y}] += 1.0 - pc_;
            if (pc_ > 0.0)
                for (auto& [pair, p] : inner_->pair_outcome_distribution(x, y))
                    acc[pair] += pc_ * p;
            PairOutcome out;
            for (auto& [pair, p] : acc)
                if (p > 0.0) out.emplace_back(pair, p);
            return out;
        }
        case Kind::TwoToOne:
            throw std::logic_error(
                "pair_outcome_distribution: operator has no two-offspring form");
    }
    throw std::logic_error("pair_outcome_distribution: unknown kind");
}

Outcome CrossoverOp::outcome_distribution(const BitString& x, const BitString& y) const {
    require_same_size(x, y);
    std::map<BitString, double> acc;
    switch (kind_) {
        case Kind::SinglePoint: {
            for (auto& [pair, p] : pair_outcome_distribution(x, y)) {
                add_mass(acc, pair.first, p / 2.0);
                add_mass(acc, pair.second, p / 2.0);
            }
            break;
        }
        case Kind::PassThrough: {
            add_mass(acc, x, (1.0 - pc_) / 2.0);
            add_mass(acc, y, (1.0 - pc_) / 2.0);
            if (pc_ > 0.0)
                for (auto& [s, p] : inner_->outcome_distribution(x, y)) add_mass(acc, s, pc_ * p);
            break;
        }
        case Kind::TwoToOne: {
            for (auto& [pair, p] : inner_->pair_outcome_distribution(x, y)) {
                add_mass(acc, pair.first, p / 2.0);
                add_mass(acc, pair.second, p / 2.0);
            }
            break;
        }
    }
    Outcome out;
    out.reserve(acc.size());
    for (auto& [s, p] : acc) out.emplace_back(s, p);
    return out;
}

PairSampler uniform_pair_sampler(std::size_t n) {
    return [n](RandomStream& rng) {
        BitString x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.bernoulli(0.5)) x.flip(i);
            if (rng.bernoulli(0.5)) y.flip(i);
        }
        return std::make_pair(std::move(x), std::move(y));
    };
}

PairSampler shuffled_pair_sampler(std::size_t n) {
    return [n](RandomStream& rng) {
        BitString x(n);
        for (std::size_t i = 0; i < n; ++i)
            if (rng.bernoulli(0.5)) x.flip(i);
        // Fisher-Yates on a copy of x's bits.
        std::vector<int> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = x.get(i);
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = rng.uniform_index(i);
            std::swap(bits[i - 1], bits[j]);
        }
        BitString y(n);
        for (std::size_t i = 0; i < n; ++i) y.set(i, bits[i]);
        return std::make_pair(std::move(x), std::move(y));
    };
}

namespace {

struct WilsonInterval {
    double lo, hi;
};

WilsonInterval wilson95(std::size_t successes, std::size_t trials) {
    const double z = 1.959963984540054;  // 97.5% normal quantile
    const double nn = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

bool eps0_success(const CrossoverOp& op, const Problem& problem, const BitString& x,
                  const BitString& y, RandomStream& rng) {
    // Scored on the one offspring the engine actually keeps, even when the
    // operator could produce a pair.
    const Fitness best = std::max(fitness(problem, x), fitness(problem, y));
    return fitness(problem, op.apply(x, y, rng)) >= best;
}

bool eps1_success(const CrossoverOp& op, const Problem& problem, const BitString& x,
                  const BitString& y, RandomStream& rng) {
    const Fitness fx = fitness(problem, x);
    const Fitness fy = fitness(problem, y);
    const Fitness fz = fitness(problem, op.apply(x, y, rng));
    if (fx == fy) return fz == fx;
    return fz > std::min(fx, fy);
}

EpsEstimate run_estimate(const std::function<bool(RandomStream&)>& trial, std::size_t trials,
                         RandomStream& rng) {
    if (trials == 0) throw std::invalid_argument("epsilon estimate: trials must be >= 1");
    std::size_t successes = 0;
    for (std::size_t t = 0; t < trials; ++t)
        if (trial(rng)) ++successes;
    const auto ci = wilson95(successes, trials);
    return {static_cast<double>(successes) / static_cast<double>(trials), ci.lo, ci.hi, trials};
}

constexpr std::size_t kExactEpsLimit = 10;

double pair_success_prob_eps0(const CrossoverOp& op, const Problem& problem, const BitString& x,
                              const BitString& y) {
    const Fitness best = std::max(fitness(problem, x), fitness(problem, y));
    double p = 0.0;
    for (auto& [s, q] : op.outcome_distribution(x, y))
        if (fitness(problem, s) >= best) p += q;
    return p;
}

double pair_success_prob_eps1(const CrossoverOp& op, const Problem& problem, const BitString& x,
                              const BitString& y) {
    const Fitness fx = fitness(problem, x);
    const Fitness fy = fitness(problem, y);
    double p = 0.0;
    for (auto& [s, q] : op.outcome_distribution(x, y)) {
        const Fitness fz = fitness(problem, s);
        if (fx == fy ? fz == fx : fz > std::min(fx, fy)) p += q;
    }
    return p;
}

template <typename F>
double exact_eps(const Problem& problem, F&& pair_prob) {
    const std::size_t n = problem.dimension();
    if (n > kExactEpsLimit)
        throw std::invalid_argument("exact epsilon: dimension too large to enumerate");
    double worst = 1.0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 0; i < total; ++i) {
        const BitString x = BitString::from_index(i, n);
        for (std::uint64_t j = 0; j < total; ++j) {
            const BitString y = BitString::from_index(j, n);
            worst = std::min(worst, pair_prob(x, y));
        }
    }
    return worst;
}

}  // namespace

EpsEstimate estimate_eps0(const CrossoverOp& op, const Problem& problem,
                          const PairSampler& sampler, std::size_t trials, RandomStream& rng) {
    return run_estimate(
        [&](RandomStream& r) {
            auto [x, y] = sampler(r);
            return eps0_success(op, problem, x, y, r);
        },
        trials, rng);
}

EpsEstimate estimate_eps1(const CrossoverOp& op, const Problem& problem,
                          const PairSampler& sampler, std::size_t trials, RandomStream& rng) {
    return run_estimate(
        [&](RandomStream& r) {
            auto [x, y] = sampler(r);
            return eps1_success(op, problem, x, y, r);
        },
        trials, rng);
}

double exact_eps0(const CrossoverOp& op, const Problem& problem) {
    return exact_eps(problem, [&](const BitString& x, const BitString& y) {
        return pair_success_prob_eps0(op, problem, x, y);
    });
}

double exact_eps1(const CrossoverOp& op, const Problem& problem) {
    return exact_eps(problem, [&](const BitString& x, const BitString& y) {
        return pair_success_prob_eps1(op, problem, x, y);
    });
}

}  // namespace levelga
