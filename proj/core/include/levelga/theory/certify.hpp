#pragma once

#include "levelga/bitstring.hpp"
#include "levelga/neighborhood.hpp"
#include "levelga/problem.hpp"

namespace levelga::theory {

/// Quality certificate for a feasible point: its objective against the
/// true optimum (exhaustive scan), plus whether it is locally optimal for
/// the given neighbourhood. The ratio is only a guarantee when the point
/// is a local optimum; callers decide what ratio they accept.
struct CertifyResult {
    bool is_local_optimum = false;
    Fitness value = 0;
    Fitness optimum = 0;
    double ratio = 0.0;           // optimum / value; +inf when value == 0
    BitString better_neighbor;    // set when a strictly improving neighbour exists
};

/// Exhaustive over the cube, so dimension must be at most 20. Throws when
/// x is infeasible or no feasible string exists.
CertifyResult certify_approximation(const Problem& problem, const NeighborhoodSpec& nbhd,
                                    const BitString& x);

}  // namespace levelga::theory
