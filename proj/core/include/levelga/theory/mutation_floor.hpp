#pragma once

#include <cstddef>

namespace levelga::theory {

/// P(bitwise mutation at rate pm turns x into a fixed y at Hamming
/// distance d) = pm^d * (1 - pm)^(n - d). Computed in log space.
double bitwise_point_prob(std::size_t n, double pm, std::size_t distance);

/// Floor on the probability of reaching any fixed string within Hamming
/// distance `radius` under bitwise mutation at rate radius / n.
struct MutationFloor {
    std::size_t n = 0;
    int radius = 0;
    double rate = 0.0;         // radius / n
    double exact = 0.0;        // min over d in [1, radius] of bitwise_point_prob
    double closed_form = 0.0;  // (radius / (e * n))^radius
    double stay_exact = 0.0;   // (1 - radius/n)^(n - radius)
    double stay_lower = 0.0;   // e^(-radius)
};

/// Requires 1 <= radius <= n. The guarantee exact >= closed_form and
/// stay_exact >= stay_lower holds whenever radius <= n / 2; both sides are
/// reported so callers can assert the margins.
MutationFloor mutation_reach_floor(std::size_t n, int radius);

}  // namespace levelga::theory
