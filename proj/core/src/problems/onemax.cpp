#include "levelga/problems/onemax.hpp"

#include <stdexcept>

namespace levelga {

namespace {

void require_dim(std::size_t n) {
    if (n < 1) throw std::invalid_argument("problem dimension must be >= 1");
}

}  // namespace

OneMax::OneMax(std::size_t n) : n_(n) { require_dim(n); }

Fitness OneMax::objective(const BitString& x) const {
    return static_cast<Fitness>(x.count_ones());
}

std::string OneMax::name() const { return "onemax:" + std::to_string(n_); }

std::vector<Fitness> OneMax::objective_values() const {
    std::vector<Fitness> v(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) v[i] = static_cast<Fitness>(i);
    return v;
}

LeadingOnes::LeadingOnes(std::size_t n) : n_(n) { require_dim(n); }

Fitness LeadingOnes::objective(const BitString& x) const {
    Fitness f = 0;
    for (std::size_t i = 0; i < x.size() && x.get(i) == 1; ++i) ++f;
    return f;
}

std::string LeadingOnes::name() const { return "leadingones:" + std::to_string(n_); }

std::vector<Fitness> LeadingOnes::objective_values() const {
    std::vector<Fitness> v(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) v[i] = static_cast<Fitness>(i);
    return v;
}

}  // namespace levelga
