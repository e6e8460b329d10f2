#include "levelga/neighborhood.hpp"

#include <stdexcept>

namespace levelga {

namespace {

// Emits subsets of {0..n-1} of size d in lexicographic order, flipping the
// chosen positions of x.
void emit_distance(const BitString& x, std::size_t d, std::vector<BitString>& out) {
    const std::size_t n = x.size();
    if (d > n) return;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        BitString y = x;
        for (std::size_t i : idx) y.flip(i);
        out.push_back(std::move(y));
        // next combination
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - d) {
                ++idx[i];
                for (std::size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
                i = d + 1;
                break;
            }
        }
        if (i != d + 1) break;
    }
}

}  // namespace

std::vector<BitString> hamming_ball(const BitString& x, std::size_t r) {
    if (r == 0) throw std::invalid_argument("hamming_ball: radius must be >= 1");
    std::vector<BitString> out;
    for (std::size_t d = 1; d <= std::min(r, x.size()); ++d) emit_distance(x, d, out);
    return out;
}

std::vector<BitString> hamming_neighborhood(const Problem& problem, const BitString& x,
                                            std::size_t r) {
    if (x.size() != problem.dimension())
        throw std::invalid_argument("hamming_neighborhood: dimension mismatch");
    std::vector<BitString> out;
    for (auto& y : hamming_ball(x, r))
        if (problem.is_feasible(y)) out.push_back(std::move(y));
    return out;
}

NeighborhoodSpec NeighborhoodSpec::hamming(std::size_t radius) {
    if (radius == 0) throw std::invalid_argument("NeighborhoodSpec: radius must be >= 1");
    return NeighborhoodSpec(Kind::HammingRadius, radius);
}

NeighborhoodSpec NeighborhoodSpec::native() { return NeighborhoodSpec(Kind::ProblemNative, 0); }

std::vector<BitString> NeighborhoodSpec::neighbors(const Problem& problem,
                                                   const BitString& x) const {
    if (kind_ == Kind::HammingRadius) return hamming_neighborhood(problem, x, radius_);
    return problem.native_neighbors(x);
}

std::size_t NeighborhoodSpec::flip_bound(const Problem& problem) const {
    return kind_ == Kind::HammingRadius ? radius_ : problem.neighborhood_radius();
}

bool is_local_optimum(const Problem& problem, const NeighborhoodSpec& nbhd, const BitString& x) {
    if (!problem.is_feasible(x))
        throw std::invalid_argument("is_local_optimum: x is infeasible");
    const Fitness fx = problem.objective(x);
    for (const BitString& y : nbhd.neighbors(problem, x))
        if (problem.objective(y) > fx) return false;
    return true;
}

LocalSearchResult local_search(const Problem& problem, const NeighborhoodSpec& nbhd,
                               const BitString& start) {
    if (!problem.is_feasible(start))
        throw std::invalid_argument("local_search: start point is infeasible");
    LocalSearchResult result{start, 0};
    bool improved = true;
    while (improved) {
        improved = false;
        const Fitness f = problem.objective(result.optimum);
        for (const BitString& y : nbhd.neighbors(problem, result.optimum)) {
            if (problem.objective(y) > f) {
                result.optimum = y;
                ++result.moves;
                improved = true;
                break;
            }
        }
    }
    return result;
}

}  // namespace levelga
