#pragma once

#include <filesystem>
#include <iosfwd>

#include "levelga/problem.hpp"

namespace levelga {

/// Table-driven instance for desk-scale experiments (n <= 12): explicit
/// feasibility and objective for every string, a designated feasible fallback
/// point, and a Hamming-radius neighborhood filtered to feasible strings.
/// Objectives must be >= 1 on the feasible set so the fitness penalty 0 for
/// infeasible strings stays strictly below every feasible value.
class ToyNpo : public Problem {
public:
    /// `feasible` and `objective` are indexed by the string's numeric value
    /// (most significant bit first), so entry i describes
    /// BitString::from_index(i, n).
    ToyNpo(std::size_t n, std::vector<bool> feasible, std::vector<Fitness> objective,
           std::optional<std::uint64_t> fallback_index = std::nullopt, std::size_t radius = 1,
           std::string label = "toy");

    /// Plain-text loader; see the file-format notes in the README. Format:
    /// first significant line is n, followed by 2^n lines "<feasible>
    /// <objective>" in numeric string order, then optional "fallback <index>"
    /// and "radius <r>" lines. '#' starts a comment.
    static ToyNpo from_file(const std::filesystem::path& path);
    static ToyNpo parse(std::istream& in, std::string label);
    std::string to_text() const;

    // Built-in instances used by tests and examples.
    static ToyNpo example_with_infeasible();   // n=4, deceptive non-global local optimum
    static ToyNpo example_isolated_feasible(); // n=3, feasible points with empty neighborhoods
    static ToyNpo example_three_bit();         // n=3, two infeasible strings

    std::size_t dimension() const override { return n_; }
    bool is_feasible(const BitString& x) const override;
    Fitness objective(const BitString& x) const override;
    std::string name() const override { return label_; }
    bool all_feasible() const override { return all_feasible_; }
    std::optional<BitString> fallback_feasible() const override;
    std::vector<Fitness> objective_values() const override;
    std::size_t neighborhood_radius() const override { return radius_; }

private:
    std::size_t n_;
    std::vector<bool> feasible_;
    std::vector<Fitness> objective_;
    std::uint64_t fallback_index_;
    std::size_t radius_;
    std::string label_;
    bool all_feasible_;
};

}  // namespace levelga
