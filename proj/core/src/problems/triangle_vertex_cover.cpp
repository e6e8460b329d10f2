#include "levelga/problems/triangle_vertex_cover.hpp"

#include <set>
#include <stdexcept>

namespace levelga {

namespace {

// Endpoint picked by bit b of edge j within triangle t (vertex ids local to
// the triangle, 0..2). Edge 0: (0,1), edge 1: (1,2), edge 2: (2,0).
constexpr int kEndpoint[3][2] = {{0, 1}, {1, 2}, {2, 0}};

}  // namespace

TriangleVertexCover::TriangleVertexCover(std::size_t kappa) : kappa_(kappa) {
    if (kappa < 1) throw std::invalid_argument("TriangleVertexCover: kappa must be >= 1");
}

std::vector<std::size_t> TriangleVertexCover::cover(const BitString& x) const {
    if (x.size() != dimension())
        throw std::invalid_argument("TriangleVertexCover: genotype dimension mismatch");
    std::vector<std::size_t> vertices;
    vertices.reserve(2 * kappa_ + kappa_);
    for (std::size_t t = 0; t < kappa_; ++t) {
        bool in[3] = {false, false, false};
        for (std::size_t j = 0; j < 3; ++j) in[kEndpoint[j][x.get(3 * t + j)]] = true;
        for (std::size_t v = 0; v < 3; ++v)
            if (in[v]) vertices.push_back(3 * t + v);
    }
    return vertices;
}

Fitness TriangleVertexCover::objective(const BitString& x) const {
    // Counting per triangle avoids materializing the cover: a triangle's
    // three edge choices select either two or all three of its vertices.
    if (x.size() != dimension())
        throw std::invalid_argument("TriangleVertexCover: genotype dimension mismatch");
    std::size_t covered = 0;
    for (std::size_t t = 0; t < kappa_; ++t) {
        bool in[3] = {false, false, false};
        for (std::size_t j = 0; j < 3; ++j) in[kEndpoint[j][x.get(3 * t + j)]] = true;
        covered += static_cast<std::size_t>(in[0]) + in[1] + in[2];
    }
    return static_cast<Fitness>(3 * kappa_ - covered);
}

std::string TriangleVertexCover::name() const { return "vcp:" + std::to_string(kappa_); }

std::vector<Fitness> TriangleVertexCover::objective_values() const {
    std::vector<Fitness> v(kappa_ + 1);
    for (std::size_t i = 0; i <= kappa_; ++i) v[i] = static_cast<Fitness>(i);
    return v;
}

VcpOptimaCount count_triangle_cover_optima(std::size_t kappa) {
    if (kappa < 1 || kappa > 6)
        throw std::invalid_argument("count_triangle_cover_optima: kappa must be in [1, 6]");
    TriangleVertexCover problem(kappa);
    const std::size_t n = problem.dimension();
    const Fitness best = static_cast<Fitness>(kappa);
    VcpOptimaCount count{0, 0};
    std::set<std::vector<std::size_t>> covers;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
        const BitString x = BitString::from_index(idx, n);
        if (problem.objective(x) == best) {
            ++count.optimal_strings;
            covers.insert(problem.cover(x));
        }
    }
    count.optimal_covers = covers.size();
    return count;
}

}  // namespace levelga
