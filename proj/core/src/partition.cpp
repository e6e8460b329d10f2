#include "levelga/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace levelga {

namespace {

// Index of `fit` in the strictly ascending `values`, 1-based.
int value_level(const std::vector<Fitness>& values, Fitness fit) {
    auto it = std::lower_bound(values.begin(), values.end(), fit);
    if (it == values.end() || *it != fit)
        throw std::logic_error("level partition: fitness value not covered by the value list");
    return static_cast<int>(it - values.begin()) + 1;
}

void require_ascending(const std::vector<Fitness>& values, const char* what) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i - 1] >= values[i])
            throw std::invalid_argument(std::string(what) + ": values must be strictly ascending");
}

// Exhaustive scan helpers for the enumerated factory variants.
constexpr std::size_t kEnumerationLimit = 20;

void require_enumerable(const Problem& problem, const char* what) {
    if (problem.dimension() > kEnumerationLimit)
        throw std::invalid_argument(std::string(what) +
                                    ": dimension too large to enumerate the value list; pass it explicitly");
}

}  // namespace

LevelPartition::LevelPartition(Kind kind, int m, Classifier classify)
    : kind_(kind), m_(m), classify_(std::move(classify)) {
    if (m_ < 1) throw std::invalid_argument("LevelPartition: m must be >= 1");
    if (!classify_) throw std::invalid_argument("LevelPartition: empty classifier");
}

int LevelPartition::level_of(const BitString& x, Fitness fit) const {
    int level = classify_(x, fit);
    if (level < 1 || level > m_ + 1)
        throw std::logic_error("LevelPartition: classifier produced an out-of-range level");
    return level;
}

int LevelPartition::level_of(const Problem& problem, const BitString& x) const {
    return level_of(x, fitness(problem, x));
}

LevelPartition canonical_partition(const Problem& /*problem*/, std::vector<Fitness> values) {
    require_ascending(values, "canonical_partition");
    if (values.size() < 2)
        throw std::invalid_argument(
            "canonical_partition: needs at least two fitness values (m >= 1)");
    const int m = static_cast<int>(values.size()) - 1;
    auto classify = [values = std::move(values)](const BitString&, Fitness fit) {
        return value_level(values, fit);
    };
    return LevelPartition(LevelPartition::Kind::Canonical, m, std::move(classify));
}

LevelPartition canonical_partition(const Problem& problem) {
    std::vector<Fitness> values = problem.objective_values();
    if (!problem.all_feasible() && (values.empty() || values.front() != 0))
        values.insert(values.begin(), 0);
    return canonical_partition(problem, std::move(values));
}

LevelPartition merged_local_optima_partition(const Problem& problem, const NeighborhoodSpec& nbhd,
                                             std::vector<Fitness> non_lo_values) {
    if (!problem.all_feasible())
        throw std::invalid_argument(
            "merged_local_optima_partition: requires a fully feasible cube");
    require_ascending(non_lo_values, "merged_local_optima_partition");
    if (non_lo_values.empty())
        throw std::invalid_argument(
            "merged_local_optima_partition: every point is locally optimal (m = 0)");
    const int m = static_cast<int>(non_lo_values.size());

    if (problem.local_optima_are_argmax(nbhd.flip_bound(problem))) {
        // Local optima are exactly the top fitness class, so membership needs
        // no neighborhood probing.
        const Fitness top = problem.objective_values().back();
        auto classify = [values = std::move(non_lo_values), top, m](const BitString&,
                                                                    Fitness fit) {
            if (fit == top) return m + 1;
            return value_level(values, fit);
        };
        return LevelPartition(LevelPartition::Kind::MergedLocalOptima, m, std::move(classify));
    }

    auto classify = [&problem, nbhd, values = std::move(non_lo_values), m](const BitString& x,
                                                                           Fitness fit) {
        if (is_local_optimum(problem, nbhd, x)) return m + 1;
        return value_level(values, fit);
    };
    return LevelPartition(LevelPartition::Kind::MergedLocalOptima, m, std::move(classify));
}

LevelPartition merged_local_optima_partition(const Problem& problem,
                                             const NeighborhoodSpec& nbhd) {
    if (!problem.all_feasible())
        throw std::invalid_argument(
            "merged_local_optima_partition: requires a fully feasible cube");
    if (problem.local_optima_are_argmax(nbhd.flip_bound(problem))) {
        std::vector<Fitness> values = problem.objective_values();
        values.pop_back();  // drop the top class: it is the local-optima set
        return merged_local_optima_partition(problem, nbhd, std::move(values));
    }
    require_enumerable(problem, "merged_local_optima_partition");
    const std::size_t n = problem.dimension();
    std::vector<Fitness> non_lo;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
        BitString x = BitString::from_index(idx, n);
        if (!is_local_optimum(problem, nbhd, x)) non_lo.push_back(problem.objective(x));
    }
    std::sort(non_lo.begin(), non_lo.end());
    non_lo.erase(std::unique(non_lo.begin(), non_lo.end()), non_lo.end());
    return merged_local_optima_partition(problem, nbhd, std::move(non_lo));
}

LevelPartition general_partition(const Problem& problem, const NeighborhoodSpec& nbhd,
                                 std::vector<Fitness> feasible_non_lo_values) {
    require_ascending(feasible_non_lo_values, "general_partition");
    // m = 1 + (number of feasible non-locally-optimal strata); an empty list
    // degenerates to infeasible strings vs local optima.
    const int m = 1 + static_cast<int>(feasible_non_lo_values.size());
    auto classify = [&problem, nbhd, values = std::move(feasible_non_lo_values), m](
                        const BitString& x, Fitness fit) {
        if (fit == 0 && !problem.is_feasible(x)) return 1;
        if (is_local_optimum(problem, nbhd, x)) return m + 1;
        return 1 + value_level(values, fit);
    };
    return LevelPartition(LevelPartition::Kind::InfeasibleFirst, m, std::move(classify));
}

LevelPartition general_partition(const Problem& problem, const NeighborhoodSpec& nbhd) {
    require_enumerable(problem, "general_partition");
    const std::size_t n = problem.dimension();
    std::vector<Fitness> values;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
        BitString x = BitString::from_index(idx, n);
        if (problem.is_feasible(x) && !is_local_optimum(problem, nbhd, x))
            values.push_back(problem.objective(x));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return general_partition(problem, nbhd, std::move(values));
}

}  // namespace levelga
