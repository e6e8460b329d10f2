#include "levelga/problems/toy_npo.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace levelga {

namespace {

constexpr std::size_t kMaxDim = 12;

std::uint64_t first_feasible(const std::vector<bool>& feasible) {
    for (std::uint64_t i = 0; i < feasible.size(); ++i)
        if (feasible[i]) return i;
    throw std::invalid_argument("ToyNpo: no feasible string");
}

}  // namespace

ToyNpo::ToyNpo(std::size_t n, std::vector<bool> feasible, std::vector<Fitness> objective,
               std::optional<std::uint64_t> fallback_index, std::size_t radius,
               std::string label)
    : n_(n),
      feasible_(std::move(feasible)),
      objective_(std::move(objective)),
      radius_(radius),
      label_(std::move(label)) {
    if (n_ < 1 || n_ > kMaxDim)
        throw std::invalid_argument("ToyNpo: dimension must be in [1, 12]");
    const std::size_t total = std::size_t{1} << n_;
    if (feasible_.size() != total || objective_.size() != total)
        throw std::invalid_argument("ToyNpo: tables must have exactly 2^n entries");
    if (radius_ < 1) throw std::invalid_argument("ToyNpo: radius must be >= 1");
    all_feasible_ = std::all_of(feasible_.begin(), feasible_.end(), [](bool f) { return f; });
    for (std::size_t i = 0; i < total; ++i)
        if (feasible_[i] && objective_[i] < 1)
            throw std::invalid_argument("ToyNpo: feasible objectives must be >= 1");
    fallback_index_ = fallback_index ? *fallback_index : first_feasible(feasible_);
    if (fallback_index_ >= total || !feasible_[fallback_index_])
        throw std::invalid_argument("ToyNpo: fallback must be a feasible string");
}

bool ToyNpo::is_feasible(const BitString& x) const {
    if (x.size() != n_) throw std::invalid_argument("ToyNpo: genotype dimension mismatch");
    return feasible_[x.to_index()];
}

Fitness ToyNpo::objective(const BitString& x) const {
    if (x.size() != n_) throw std::invalid_argument("ToyNpo: genotype dimension mismatch");
    const auto idx = x.to_index();
    if (!feasible_[idx]) throw std::logic_error("ToyNpo: objective queried on infeasible string");
    return objective_[idx];
}

std::optional<BitString> ToyNpo::fallback_feasible() const {
    return BitString::from_index(fallback_index_, n_);
}

std::vector<Fitness> ToyNpo::objective_values() const {
    std::vector<Fitness> values;
    for (std::size_t i = 0; i < feasible_.size(); ++i)
        if (feasible_[i]) values.push_back(objective_[i]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

ToyNpo ToyNpo::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ToyNpo: cannot open " + path.string());
    return parse(in, "toy:" + path.filename().string());
}

ToyNpo ToyNpo::parse(std::istream& in, std::string label) {
    auto next_line = [&in](std::string& line) {
        while (std::getline(in, line)) {
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw std::runtime_error("ToyNpo: missing dimension line");
    std::size_t n = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> n) || n < 1 || n > kMaxDim)
            throw std::runtime_error("ToyNpo: dimension must be an integer in [1, 12]");
    }
    const std::size_t total = std::size_t{1} << n;
    std::vector<bool> feasible(total, false);
    std::vector<Fitness> objective(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        if (!next_line(line))
            throw std::runtime_error("ToyNpo: expected " + std::to_string(total) +
                                     " table lines, got " + std::to_string(i));
        std::istringstream ss(line);
        int feas = 0;
        Fitness obj = 0;
        if (!(ss >> feas >> obj) || (feas != 0 && feas != 1))
            throw std::runtime_error("ToyNpo: table line " + std::to_string(i) +
                                     " must be '<0|1> <objective>'");
        feasible[i] = feas == 1;
        objective[i] = obj;
    }
    std::optional<std::uint64_t> fallback;
    std::size_t radius = 1;
    while (next_line(line)) {
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "fallback") {
            std::uint64_t idx = 0;
            if (!(ss >> idx)) throw std::runtime_error("ToyNpo: fallback needs an index");
            fallback = idx;
        } else if (key == "radius") {
            if (!(ss >> radius)) throw std::runtime_error("ToyNpo: radius needs a value");
        } else {
            throw std::runtime_error("ToyNpo: unknown directive '" + key + "'");
        }
    }
    return ToyNpo(n, std::move(feasible), std::move(objective), fallback, radius,
                  std::move(label));
}

std::string ToyNpo::to_text() const {
    std::ostringstream out;
    out << n_ << "\n";
    for (std::size_t i = 0; i < feasible_.size(); ++i)
        out << (feasible_[i] ? 1 : 0) << " " << (feasible_[i] ? objective_[i] : 0) << "\n";
    out << "fallback " << fallback_index_ << "\n";
    out << "radius " << radius_ << "\n";
    return out.str();
}

namespace {

// Builds the objective table from (index, value) pairs on top of a default.
std::vector<Fitness> table(std::size_t total, Fitness fill,
                           std::initializer_list<std::pair<std::uint64_t, Fitness>> overrides) {
    std::vector<Fitness> t(total, fill);
    for (auto& [i, v] : overrides) t[i] = v;
    return t;
}

}  // namespace

ToyNpo ToyNpo::example_with_infeasible() {
    // n=4: objective 1 + ones(x) except the all-zeros string is boosted to 3,
    // making it a strict local optimum (its neighbors score 2) that is far
    // from the global optimum 1111 (score 5). Strings 0011 and 1100 are
    // infeasible holes.
    const std::size_t n = 4;
    const std::size_t total = 16;
    std::vector<bool> feasible(total, true);
    feasible[0b0011] = false;
    feasible[0b1100] = false;
    std::vector<Fitness> objective(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        const auto x = BitString::from_index(i, n);
        objective[i] = static_cast<Fitness>(1 + x.count_ones());
    }
    objective[0b0000] = 3;
    return ToyNpo(n, std::move(feasible), std::move(objective), 0b0001, 1,
                  "toy:deceptive4");
}

ToyNpo ToyNpo::example_isolated_feasible() {
    // n=3: only 000 and 111 are feasible, so both have empty neighborhoods
    // at radius 1 and are vacuously locally optimal.
    const std::size_t n = 3;
    std::vector<bool> feasible(8, false);
    feasible[0b000] = true;
    feasible[0b111] = true;
    return ToyNpo(n, std::move(feasible), table(8, 0, {{0b000, 1}, {0b111, 2}}), 0b111, 1,
                  "toy:isolated3");
}

ToyNpo ToyNpo::example_three_bit() {
    // n=3 with infeasible 101 and 110. Feasible objectives leave 111 (score
    // 4) and the shielded 100 (score 1, every feasible neighbor also scores
    // 1) as the local optima.
    const std::size_t n = 3;
    std::vector<bool> feasible(8, true);
    feasible[0b101] = false;
    feasible[0b110] = false;
    auto objective = table(8, 0,
                           {{0b000, 1},
                            {0b001, 2},
                            {0b010, 2},
                            {0b011, 3},
                            {0b100, 1},
                            {0b111, 4}});
    return ToyNpo(n, std::move(feasible), std::move(objective), 0b000, 1, "toy:threebit");
}

}  // namespace levelga
