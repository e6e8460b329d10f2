#pragma once

#include <cstdint>

#include "levelga/problem.hpp"

namespace levelga {

/// Vertex cover on kappa disjoint triangles in the edge-choice encoding:
/// triangle t occupies vertices (3t, 3t+1, 3t+2) and contributes edges
/// e_{3t} = (3t, 3t+1), e_{3t+1} = (3t+1, 3t+2), e_{3t+2} = (3t+2, 3t).
/// Bit i selects an endpoint of edge i (0 = first listed, 1 = second); the
/// cover is the union of selected endpoints and the objective rewards small
/// covers: f(x) = 3*kappa - |cover(x)|. Every string encodes a valid cover,
/// and under single-bit moves every local optimum is globally optimal.
class TriangleVertexCover : public Problem {
public:
    explicit TriangleVertexCover(std::size_t kappa);

    std::size_t dimension() const override { return 3 * kappa_; }
    bool is_feasible(const BitString&) const override { return true; }
    Fitness objective(const BitString& x) const override;
    std::string name() const override;
    std::vector<Fitness> objective_values() const override;
    bool local_optima_are_argmax(std::size_t radius) const override { return radius >= 1; }

    std::size_t kappa() const { return kappa_; }
    /// Sorted vertex ids of the encoded cover.
    std::vector<std::size_t> cover(const BitString& x) const;

private:
    std::size_t kappa_;
};

struct VcpOptimaCount {
    std::uint64_t optimal_strings;  // strings attaining the maximum objective
    std::uint64_t optimal_covers;   // distinct minimum covers those strings encode
};

/// Exhaustively counts both notions of "optimal solution" for kappa disjoint
/// triangles; the two differ because several strings encode the same cover.
/// kappa <= 6.
VcpOptimaCount count_triangle_cover_optima(std::size_t kappa);

}  // namespace levelga
