#include "levelga/population.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levelga/partition.hpp"

namespace levelga {

const Individual& Population::at_rank(std::size_t rank) const {
    if (rank < 1 || rank > members_.size())
        throw std::invalid_argument("Population::at_rank: rank out of range");
    return members_[rank - 1];
}

Population sort_population(Population pop, const LevelPartition& partition) {
    auto& members = pop.mutable_members();
    for (auto& ind : members) ind.level = partition.level_of(ind.genotype, ind.fitness);

    std::vector<std::size_t> order(members.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&members](std::size_t a, std::size_t b) {
        if (members[a].level != members[b].level) return members[a].level > members[b].level;
        if (auto c = members[a].genotype <=> members[b].genotype; c != 0) return c < 0;
        return a < b;  // insertion order last
    });

    std::vector<Individual> sorted;
    sorted.reserve(members.size());
    for (std::size_t i : order) sorted.push_back(std::move(members[i]));
    Population out(std::move(sorted));
    out.mark_sorted();
    return out;
}

const Individual& gamma_ranked(const Population& pop, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma_ranked: gamma must lie in (0, 1]");
    if (!pop.sorted()) throw std::logic_error("gamma_ranked: population is not sorted");
    if (pop.lambda() == 0) throw std::invalid_argument("gamma_ranked: empty population");
    auto rank = static_cast<std::size_t>(std::ceil(gamma * static_cast<double>(pop.lambda())));
    if (rank < 1) rank = 1;
    if (rank > pop.lambda()) rank = pop.lambda();
    return pop.at_rank(rank);
}

}  // namespace levelga
