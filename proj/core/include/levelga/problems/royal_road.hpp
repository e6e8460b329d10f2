#pragma once

#include "levelga/problem.hpp"

namespace levelga {

/// Block-structured fitness: the string splits into n/r consecutive blocks of
/// length r and the objective counts the all-ones blocks. The native
/// neighborhood is the Hamming ball of radius r, under which the all-ones
/// string is the unique local optimum.
class RoyalRoad : public Problem {
public:
    RoyalRoad(std::size_t n, std::size_t r);

    std::size_t dimension() const override { return n_; }
    bool is_feasible(const BitString&) const override { return true; }
    Fitness objective(const BitString& x) const override;
    std::string name() const override;
    std::vector<Fitness> objective_values() const override;
    std::size_t neighborhood_radius() const override { return r_; }
    bool local_optima_are_argmax(std::size_t radius) const override { return radius >= r_; }

    std::size_t block_length() const { return r_; }
    std::size_t blocks() const { return n_ / r_; }

private:
    std::size_t n_, r_;
};

}  // namespace levelga
