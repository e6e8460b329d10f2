#include "levelga/theory/advisor.hpp"

#include <cmath>
#include <stdexcept>

namespace levelga::theory {

SelectionAdvice selection_advisor(double eps, double p0, double delta_prime) {
    if (!(eps > 0.0) || eps > 1.0)
        throw std::invalid_argument("selection advisor: eps must lie in (0, 1]");
    if (!(p0 > 0.0) || p0 > 1.0)
        throw std::invalid_argument("selection advisor: p0 must lie in (0, 1]");
    if (!(delta_prime > 0.0))
        throw std::invalid_argument("selection advisor: delta_prime must be positive");

    SelectionAdvice advice;
    advice.eps = eps;
    advice.p0 = p0;
    advice.delta_prime = delta_prime;

    const double pressure = 4.0 * (1.0 + delta_prime) / (eps * p0);
    advice.k_min = static_cast<int>(std::ceil(pressure));
    advice.mu_ratio_min = (1.0 + delta_prime) / (eps * p0);
    advice.eta_min = pressure;
    advice.gamma0 = 1.0 / pressure;
    advice.delta_adopted = delta_prime;
    return advice;
}

}  // namespace levelga::theory
