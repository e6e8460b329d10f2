#include "levelga/problem.hpp"

#include <stdexcept>

#include "levelga/neighborhood.hpp"

namespace levelga {

std::vector<BitString> Problem::native_neighbors(const BitString& x) const {
    return hamming_neighborhood(*this, x, neighborhood_radius());
}

Fitness fitness(const Problem& problem, const BitString& x) {
    if (x.size() != problem.dimension())
        throw std::invalid_argument("fitness: genotype dimension does not match problem");
    if (!problem.is_feasible(x)) return 0;
    return problem.objective(x);
}

}  // namespace levelga
