#include "levelga/theory/mutation_floor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levelga::theory {

double bitwise_point_prob(std::size_t n, double pm, std::size_t distance) {
    if (distance > n) throw std::invalid_argument("point prob: distance exceeds length");
    if (pm < 0.0 || pm > 1.0) throw std::invalid_argument("point prob: rate must lie in [0, 1]");
    const std::size_t stay = n - distance;
    if (pm == 0.0) return distance == 0 ? 1.0 : 0.0;
    if (pm == 1.0) return stay == 0 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(distance) * std::log(pm) +
                    static_cast<double>(stay) * std::log1p(-pm));
}

MutationFloor mutation_reach_floor(std::size_t n, int radius) {
    if (n == 0) throw std::invalid_argument("mutation floor: length must be positive");
    if (radius < 1 || static_cast<std::size_t>(radius) > n)
        throw std::invalid_argument("mutation floor: radius must lie in [1, n]");

    MutationFloor floor;
    floor.n = n;
    floor.radius = radius;
    floor.rate = static_cast<double>(radius) / static_cast<double>(n);

    floor.exact = 1.0;
    for (std::size_t d = 1; d <= static_cast<std::size_t>(radius); ++d)
        floor.exact = std::min(floor.exact, bitwise_point_prob(n, floor.rate, d));

    const double k = static_cast<double>(radius);
    floor.closed_form = std::pow(k / (std::exp(1.0) * static_cast<double>(n)), k);
    floor.stay_exact =
        std::pow(1.0 - floor.rate, static_cast<double>(n) - k);
    floor.stay_lower = std::exp(-k);
    return floor;
}

}  // namespace levelga::theory
