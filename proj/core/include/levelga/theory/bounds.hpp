#pragma once

#include <cstddef>
#include <vector>

namespace levelga::theory {

/// Inputs of the expected-runtime guarantee for level-based non-elitist
/// populations: per-level worst-case upgrade probabilities s_1..s_m with
/// floor s_star, stay probability p0, crossover preservation probability
/// eps, slack delta and selection-pressure threshold gamma0.
struct BoundParams {
    int m = 1;
    std::size_t lambda = 2;
    std::vector<double> s;  // size m
    double s_star = 0.0;
    double p0 = 0.0;
    double eps = 0.0;
    double delta = 0.0;
    double gamma0 = 0.0;

    double a() const;    // delta^2 * gamma0 / (2 * (1 + delta))
    double psi() const;  // min(delta, 1) / 2
    double c() const;    // psi^4 / 24

    /// Throws std::invalid_argument when any field is out of range.
    void validate() const;
};

/// Upper bound on the expected number of fitness evaluations until the
/// target level is reached:
///   (2 / (c * psi)) * (m * lambda * (1 + ln(1 + c * lambda))
///                      + p0 / ((1 + delta) * gamma0) * sum_j 1 / s_j).
double runtime_upper_bound(const BoundParams& params);

struct PopulationSizeBound {
    double value = 1.0;
    /// True when the logarithm's argument was <= 1, i.e. every lambda >= 1
    /// already satisfies the requirement.
    bool trivially_satisfied = false;
};

/// Smallest population size the guarantee asks for:
///   lambda >= (2 / a) * ln(32 m p0 / ((delta * gamma0)^2 * c * s_star * psi)).
PopulationSizeBound population_size_bound(const BoundParams& params);

}  // namespace levelga::theory
