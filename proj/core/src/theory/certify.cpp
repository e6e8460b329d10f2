#include "levelga/theory/certify.hpp"

#include <limits>
#include <stdexcept>

namespace levelga::theory {

CertifyResult certify_approximation(const Problem& problem, const NeighborhoodSpec& nbhd,
                                    const BitString& x) {
    const std::size_t n = problem.dimension();
    if (x.size() != n) throw std::invalid_argument("certify: dimension mismatch");
    if (n > 20) throw std::invalid_argument("certify: exhaustive scan capped at 20 bits");
    if (!problem.is_feasible(x)) throw std::invalid_argument("certify: point is infeasible");

    CertifyResult result;
    result.value = problem.objective(x);

    bool found_feasible = false;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
        const BitString y = BitString::from_index(idx, n);
        if (!problem.is_feasible(y)) continue;
        const Fitness fy = problem.objective(y);
        if (!found_feasible || fy > result.optimum) result.optimum = fy;
        found_feasible = true;
    }
    if (!found_feasible) throw std::logic_error("certify: no feasible string exists");

    result.is_local_optimum = true;
    for (const BitString& y : nbhd.neighbors(problem, x)) {
        if (problem.objective(y) > result.value) {
            result.is_local_optimum = false;
            result.better_neighbor = y;
            break;
        }
    }

    if (result.value == 0) {
        result.ratio = result.optimum == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    } else {
        result.ratio = static_cast<double>(result.optimum) / static_cast<double>(result.value);
    }
    return result;
}

}  // namespace levelga::theory
