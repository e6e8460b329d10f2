#pragma once

#include <cstddef>

namespace levelga::theory {

/// Selection-pressure prescriptions derived from the crossover preservation
/// probability eps, the mutation stay probability p0 and a slack delta_prime.
/// Any one of the three mechanisms configured at or above its listed minimum
/// yields beta(gamma) >= gamma * (1 + delta_prime) * sqrt(...) on (0, gamma0],
/// which is what the runtime guarantee's selection condition needs.
struct SelectionAdvice {
    double eps = 0.0;
    double p0 = 0.0;
    double delta_prime = 0.0;

    int k_min = 0;            // tournament size
    double mu_ratio_min = 0;  // lambda / mu must be at least this
    double eta_min = 0.0;     // exponential-ranking rate
    double gamma0 = 0.0;      // for tournament and exponential ranking
    double delta_adopted = 0.0;
};

/// Computes k_min = ceil(4 (1 + delta_prime) / (eps * p0)), the matching
/// mu-ratio and eta thresholds, and gamma0 = eps * p0 / (4 (1 + delta_prime)).
/// For comma selection use gamma0 = mu / lambda instead of the one returned
/// here. Throws std::invalid_argument on out-of-range inputs.
SelectionAdvice selection_advisor(double eps, double p0, double delta_prime);

}  // namespace levelga::theory
