#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "levelga/harness/stats.hpp"
#include "levelga/population.hpp"

namespace levelga::test {

/// Chi-square goodness-of-fit p-value for observed counts against expected
/// cell probabilities. Cells with expected count below 5 are merged into the
/// last kept cell so the asymptotic distribution applies.
inline double chi_square_gof(const std::vector<std::size_t>& counts,
                             const std::vector<double>& probs) {
    std::size_t total = 0;
    for (std::size_t c : counts) total += c;
    std::vector<double> exp_cells;
    std::vector<double> obs_cells;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double e = probs[i] * static_cast<double>(total);
        if (!exp_cells.empty() && (e < 5.0 || exp_cells.back() < 5.0)) {
            exp_cells.back() += e;
            obs_cells.back() += static_cast<double>(counts[i]);
        } else {
            exp_cells.push_back(e);
            obs_cells.push_back(static_cast<double>(counts[i]));
        }
    }
    double stat = 0.0;
    for (std::size_t i = 0; i < exp_cells.size(); ++i) {
        const double d = obs_cells[i] - exp_cells[i];
        stat += d * d / exp_cells[i];
    }
    return harness::chi_square_tail(stat, exp_cells.size() - 1);
}

/// |estimate - exact| <= sigmas * binomial std error of the estimate.
inline bool within_sigma(double estimate, double exact, std::size_t draws, double sigmas) {
    const double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(draws));
    return std::abs(estimate - exact) <= sigmas * se + 1e-12;
}

/// Sorted population whose members carry the given levels (fitness = level).
/// `counts[i]` members sit at level `levels[i]`; levels must be descending.
inline Population leveled_population(const std::vector<int>& levels,
                                     const std::vector<std::size_t>& counts) {
    std::vector<Individual> members;
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t c = 0; c < counts[i]; ++c) {
            Individual ind;
            ind.genotype = BitString(8);
            ind.fitness = levels[i];
            ind.level = levels[i];
            members.push_back(std::move(ind));
        }
    Population pop(std::move(members));
    pop.mark_sorted();
    return pop;
}

/// Population with lambda distinct levels lambda..1, one member each.
inline Population distinct_levels(std::size_t lambda) {
    std::vector<int> levels(lambda);
    std::vector<std::size_t> counts(lambda, 1);
    for (std::size_t i = 0; i < lambda; ++i) levels[i] = static_cast<int>(lambda - i);
    return leveled_population(levels, counts);
}

}  // namespace levelga::test
