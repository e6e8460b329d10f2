#pragma once

#include "levelga/problem.hpp"

namespace levelga {

/// Count of one-bits. Unique optimum at the all-ones string.
class OneMax : public Problem {
public:
    explicit OneMax(std::size_t n);

    std::size_t dimension() const override { return n_; }
    bool is_feasible(const BitString&) const override { return true; }
    Fitness objective(const BitString& x) const override;
    std::string name() const override;
    std::vector<Fitness> objective_values() const override;
    bool local_optima_are_argmax(std::size_t radius) const override { return radius >= 1; }

private:
    std::size_t n_;
};

/// Length of the leading all-ones prefix.
class LeadingOnes : public Problem {
public:
    explicit LeadingOnes(std::size_t n);

    std::size_t dimension() const override { return n_; }
    bool is_feasible(const BitString&) const override { return true; }
    Fitness objective(const BitString& x) const override;
    std::string name() const override;
    std::vector<Fitness> objective_values() const override;
    bool local_optima_are_argmax(std::size_t radius) const override { return radius >= 1; }

private:
    std::size_t n_;
};

}  // namespace levelga
