#include "levelga/theory/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace levelga::theory {

double BoundParams::a() const { return delta * delta * gamma0 / (2.0 * (1.0 + delta)); }

double BoundParams::psi() const { return std::min(delta, 1.0) / 2.0; }

double BoundParams::c() const {
    const double p = psi();
    return p * p * p * p / 24.0;
}

void BoundParams::validate() const {
    if (m < 1) throw std::invalid_argument("bound params: m must be >= 1");
    if (lambda < 1) throw std::invalid_argument("bound params: lambda must be >= 1");
    if (s.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("bound params: need one upgrade probability per level");
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (!(s[j] > 0.0) || s[j] > 1.0)
            throw std::invalid_argument("bound params: s_" + std::to_string(j + 1) +
                                        " must lie in (0, 1]");
    }
    if (!(s_star > 0.0) || s_star > 1.0)
        throw std::invalid_argument("bound params: s_star must lie in (0, 1]");
    for (double sj : s) {
        if (s_star > sj) throw std::invalid_argument("bound params: s_star must not exceed any s_j");
    }
    if (!(p0 > 0.0) || p0 > 1.0) throw std::invalid_argument("bound params: p0 must lie in (0, 1]");
    if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("bound params: eps must lie in (0, 1]");
    if (!(delta > 0.0)) throw std::invalid_argument("bound params: delta must be positive");
    if (!(gamma0 > 0.0) || gamma0 > 1.0)
        throw std::invalid_argument("bound params: gamma0 must lie in (0, 1]");
}

double runtime_upper_bound(const BoundParams& params) {
    params.validate();
    const double c = params.c();
    const double psi = params.psi();
    const double lambda = static_cast<double>(params.lambda);
    double inv_sum = 0.0;
    for (double sj : params.s) inv_sum += 1.0 / sj;
    const double per_level = static_cast<double>(params.m) * lambda * (1.0 + std::log1p(c * lambda));
    const double tail = params.p0 / ((1.0 + params.delta) * params.gamma0) * inv_sum;
    return 2.0 / (c * psi) * (per_level + tail);
}

PopulationSizeBound population_size_bound(const BoundParams& params) {
    params.validate();
    const double c = params.c();
    const double psi = params.psi();
    const double dg = params.delta * params.gamma0;
    const double arg = 32.0 * static_cast<double>(params.m) * params.p0 /
                       (dg * dg * c * params.s_star * psi);
    PopulationSizeBound out;
    if (arg <= 1.0) {
        out.value = 1.0;
        out.trivially_satisfied = true;
        return out;
    }
    out.value = 2.0 / params.a() * std::log(arg);
    out.trivially_satisfied = false;
    return out;
}

}  // namespace levelga::theory
