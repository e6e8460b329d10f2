#pragma once

#include <cstddef>
#include <vector>

#include "levelga/bitstring.hpp"
#include "levelga/problem.hpp"

namespace levelga {

class LevelPartition;

struct Individual {
    BitString genotype;
    Fitness fitness = 0;
    int level = 0;  // 1-based level index; 0 until a partition assigns one
};

/// A generation of lambda individuals. Ranks are 1-based: rank 1 is the best
/// member once the population has been sorted. sorted() only becomes true via
/// sort_population, and selection operators require it.
class Population {
public:
    Population() = default;
    explicit Population(std::vector<Individual> members) : members_(std::move(members)) {}

    std::size_t lambda() const { return members_.size(); }
    const std::vector<Individual>& members() const { return members_; }
    std::vector<Individual>& mutable_members() {
        sorted_ = false;
        return members_;
    }

    const Individual& at_rank(std::size_t rank) const;  // 1-based

    bool sorted() const { return sorted_; }
    void mark_sorted() { sorted_ = true; }

private:
    std::vector<Individual> members_;
    bool sorted_ = false;
};

/// Orders members best-first: level descending, then genotype ascending
/// lexicographically, then original position. The result is aligned with the
/// partition: a member of a higher level always precedes a member of a lower
/// one. Re-evaluates each member's level, not its fitness.
Population sort_population(Population pop, const LevelPartition& partition);

/// The member at rank ceil(gamma * lambda) of a sorted population,
/// gamma in (0, 1].
const Individual& gamma_ranked(const Population& pop, double gamma);

}  // namespace levelga
