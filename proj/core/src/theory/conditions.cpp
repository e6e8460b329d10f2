#include "levelga/theory/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

#include "levelga/crossover.hpp"
#include "levelga/mutation.hpp"
#include "levelga/selection.hpp"
#include "levelga/theory/mutation_floor.hpp"

namespace levelga::theory {

namespace {

constexpr std::size_t kExhaustiveCap = 12;
constexpr std::size_t kExactEpsCap = 10;

std::string strf(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// Exhaustive machinery over the index-encoded cube (dimension <= 12).

struct CubeTable {
    std::size_t n = 0;
    int m = 0;
    std::uint64_t size = 0;
    std::vector<Fitness> fit;
    std::vector<int> level;
    std::vector<std::uint8_t> feas;
};

CubeTable build_table(const Problem& problem, const LevelPartition& partition) {
    CubeTable t;
    t.n = problem.dimension();
    t.m = partition.m();
    t.size = std::uint64_t{1} << t.n;
    t.fit.resize(t.size);
    t.level.resize(t.size);
    t.feas.resize(t.size);
    for (std::uint64_t i = 0; i < t.size; ++i) {
        const BitString x = BitString::from_index(i, t.n);
        t.feas[i] = problem.is_feasible(x) ? 1 : 0;
        t.fit[i] = fitness(problem, x);
        t.level[i] = partition.level_of(x, t.fit[i]);
    }
    return t;
}

int popcount64(std::uint64_t v) { return __builtin_popcountll(v); }

/// Per-distance bitwise transition probabilities, index d in 0..n.
std::vector<double> flip_table(std::size_t n, double pm) {
    std::vector<double> p(n + 1);
    for (std::size_t d = 0; d <= n; ++d) p[d] = bitwise_point_prob(n, pm, d);
    return p;
}

std::uint64_t fallback_index(const Problem& problem) {
    const auto fb = problem.fallback_feasible();
    if (!fb) throw std::logic_error("condition check: operator needs a designated feasible point");
    return fb->to_index();
}

struct MutationProfile {
    std::vector<double> tail;  // tail[L] = P(level(mut(x)) >= L); size m + 2
    double stay = 0.0;         // P(mut(x) = x)
};

MutationProfile mutation_profile(const CubeTable& t, const Problem& problem, const MutationOp& mut,
                                 std::uint64_t ix, const std::vector<double>& flips) {
    std::vector<double> acc(static_cast<std::size_t>(t.m) + 2, 0.0);
    double stay = 0.0;
    const auto emit = [&](std::uint64_t iy, double p) {
        acc[static_cast<std::size_t>(t.level[iy])] += p;
        if (iy == ix) stay += p;
    };

    switch (mut.kind()) {
        case MutationOp::Kind::Bitwise:
            for (std::uint64_t iy = 0; iy < t.size; ++iy)
                emit(iy, flips[static_cast<std::size_t>(popcount64(ix ^ iy))]);
            break;
        case MutationOp::Kind::NeighborhoodUniform: {
            const BitString x = BitString::from_index(ix, t.n);
            std::vector<BitString> nbrs;
            if (t.feas[ix]) nbrs = problem.native_neighbors(x);
            if (!t.feas[ix] || nbrs.empty()) {
                emit(fallback_index(problem), 1.0);
            } else {
                const double p = 1.0 / static_cast<double>(nbrs.size());
                for (const BitString& y : nbrs) emit(y.to_index(), p);
            }
            break;
        }
        case MutationOp::Kind::RepairWrapped: {
            const std::uint64_t fb = fallback_index(problem);
            double bad = 0.0;
            const auto route = [&](std::uint64_t iy, double p) {
                if (t.feas[iy])
                    emit(iy, p);
                else
                    bad += p;
            };
            const MutationOp& in = *mut.inner();
            if (in.kind() == MutationOp::Kind::Bitwise) {
                for (std::uint64_t iy = 0; iy < t.size; ++iy)
                    route(iy, flips[static_cast<std::size_t>(popcount64(ix ^ iy))]);
            } else {
                const BitString x = BitString::from_index(ix, t.n);
                std::vector<BitString> nbrs;
                if (t.feas[ix]) nbrs = problem.native_neighbors(x);
                if (!t.feas[ix] || nbrs.empty()) {
                    route(fb, 1.0);
                } else {
                    const double p = 1.0 / static_cast<double>(nbrs.size());
                    for (const BitString& y : nbrs) route(y.to_index(), p);
                }
            }
            emit(fb, bad);
            break;
        }
    }

    MutationProfile out;
    out.stay = stay;
    out.tail.assign(static_cast<std::size_t>(t.m) + 2, 0.0);
    double running = 0.0;
    for (int level = t.m + 1; level >= 1; --level) {
        running += acc[static_cast<std::size_t>(level)];
        out.tail[static_cast<std::size_t>(level)] = running;
    }
    return out;
}

/// P(mut(x) = y), exact. The repair wrapper's fallback correction scans the
/// cube, so this stays desk scale.
double point_prob(const CubeTable& t, const Problem& problem, const MutationOp& mut,
                  std::uint64_t ix, std::uint64_t iy, const std::vector<double>& flips) {
    switch (mut.kind()) {
        case MutationOp::Kind::Bitwise:
            return flips[static_cast<std::size_t>(popcount64(ix ^ iy))];
        case MutationOp::Kind::NeighborhoodUniform: {
            const BitString x = BitString::from_index(ix, t.n);
            std::vector<BitString> nbrs;
            if (t.feas[ix]) nbrs = problem.native_neighbors(x);
            if (!t.feas[ix] || nbrs.empty()) return iy == fallback_index(problem) ? 1.0 : 0.0;
            double hits = 0.0;
            for (const BitString& y : nbrs)
                if (y.to_index() == iy) hits += 1.0;
            return hits / static_cast<double>(nbrs.size());
        }
        case MutationOp::Kind::RepairWrapped: {
            if (!t.feas[iy]) return 0.0;
            const MutationOp& in = *mut.inner();
            double p = point_prob(t, problem, in, ix, iy, flips);
            if (iy == fallback_index(problem)) {
                for (std::uint64_t iz = 0; iz < t.size; ++iz)
                    if (!t.feas[iz]) p += point_prob(t, problem, in, ix, iz, flips);
            }
            return p;
        }
    }
    return 0.0;
}

/// Single-offspring crossover outcomes as (index, probability) events;
/// duplicates allowed, total probability 1 * scale.
void xover_outcomes(const CrossoverOp& op, std::uint64_t ix, std::uint64_t iy, std::size_t n,
                    double scale, std::vector<std::pair<std::uint64_t, double>>& out) {
    switch (op.kind()) {
        case CrossoverOp::Kind::SinglePoint: {
            const double pc = op.pc();
            out.emplace_back(ix, scale * (1.0 - pc) / 2.0);
            out.emplace_back(iy, scale * (1.0 - pc) / 2.0);
            if (pc > 0.0) {
                if (n < 2) throw std::logic_error("crossover outcomes: splicing needs n >= 2");
                const double w = scale * pc / (2.0 * static_cast<double>(n - 1));
                for (std::size_t c = 1; c < n; ++c) {
                    const std::uint64_t hi = ((std::uint64_t{1} << c) - 1) << (n - c);
                    out.emplace_back((ix & hi) | (iy & ~hi), w);
                    out.emplace_back((iy & hi) | (ix & ~hi), w);
                }
            }
            break;
        }
        case CrossoverOp::Kind::PassThrough: {
            const double pc = op.pc();
            out.emplace_back(ix, scale * (1.0 - pc) / 2.0);
            out.emplace_back(iy, scale * (1.0 - pc) / 2.0);
            if (pc > 0.0) xover_outcomes(*op.inner(), ix, iy, n, scale * pc, out);
            break;
        }
        case CrossoverOp::Kind::TwoToOne:
            // Keeping one of the pair uniformly reproduces the inner
            // operator's single-offspring distribution.
            xover_outcomes(*op.inner(), ix, iy, n, scale, out);
            break;
    }
}

// ---------------------------------------------------------------------------
// Population universes for the selection-pressure checks. A level-count
// composition pins down beta without materializing the population: fitness is
// monotone in rank, so the per-rank win probabilities telescope over the top
// `prefix` ranks. Matches cumulative_beta on such populations.

double prefix_beta(const SelectionOp& sel, std::size_t lambda, std::size_t prefix) {
    const double l = static_cast<double>(lambda);
    const double r = static_cast<double>(prefix);
    switch (sel.kind()) {
        case SelectionOp::Kind::Tournament:
            return 1.0 - std::pow((l - r) / l, sel.k());
        case SelectionOp::Kind::MuLambda: {
            const auto mu = static_cast<std::size_t>(sel.mu());
            if (mu > lambda)
                throw std::invalid_argument("prefix_beta: mu exceeds population size");
            return static_cast<double>(std::min(prefix, mu)) / static_cast<double>(mu);
        }
        case SelectionOp::Kind::ExpRanking:
            return std::expm1(-sel.eta() * r / l) / std::expm1(-sel.eta());
    }
    throw std::logic_error("prefix_beta: unknown selection kind");
}

double composition_count(std::size_t lambda, std::size_t levels) {
    // C(lambda + levels - 1, levels - 1)
    double res = 1.0;
    const double n = static_cast<double>(lambda + levels - 1);
    const double k = static_cast<double>(levels - 1);
    for (double i = 1.0; i <= k; ++i) {
        res *= (n - k + i) / i;
        if (res > 1e18) return res;
    }
    return res;
}

void enumerate_compositions(std::size_t lambda, std::size_t levels,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> counts(levels, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t left) {
        if (slot + 1 == levels) {
            counts[slot] = left;
            visit(counts);
            return;
        }
        for (std::size_t c = 0; c <= left; ++c) {
            counts[slot] = c;
            rec(slot + 1, left - c);
        }
    };
    rec(0, lambda);
}

std::vector<std::size_t> sampled_composition(std::size_t lambda, std::size_t levels,
                                             RandomStream& rng) {
    // Uniform over compositions via a uniform (levels-1)-subset of divider
    // positions among lambda + levels - 1 slots.
    const std::size_t slots = lambda + levels - 1;
    std::vector<std::size_t> pool(slots);
    for (std::size_t i = 0; i < slots; ++i) pool[i] = i;
    for (std::size_t i = 0; i + 1 < levels; ++i) {
        const std::size_t j = i + rng.uniform_index(slots - i);
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> bars(pool.begin(), pool.begin() + (levels - 1));
    std::sort(bars.begin(), bars.end());
    std::vector<std::size_t> counts(levels, 0);
    std::size_t prev = 0;
    for (std::size_t i = 0; i < bars.size(); ++i) {
        counts[i] = bars[i] - prev;
        prev = bars[i] + 1;
    }
    counts[levels - 1] = slots - prev;
    return counts;
}

std::string composition_string(const std::vector<std::size_t>& counts) {
    std::string s = "[";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(counts[i]);
    }
    s += "]";
    return s;
}

struct PressureResult {
    bool pass = true;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::string witness;
    CheckMethod method = CheckMethod::Exhaustive;
    std::size_t universe = 0;
};

/// Worst margin of beta(gamma) - gamma * factor over the gamma grid and a
/// universe of level-count populations (levels 1..num_levels).
PressureResult pressure_check(const SelectionOp& sel, std::size_t lambda, std::size_t num_levels,
                              double gamma0, double factor, const CheckSettings& settings,
                              RandomStream& rng) {
    PressureResult res;
    const auto probe = [&](const std::vector<std::size_t>& counts) {
        for (std::size_t i = 1; i <= settings.grid_points; ++i) {
            const double gamma =
                gamma0 * (static_cast<double>(i) / static_cast<double>(settings.grid_points));
            // gamma-ranked pivot, then everyone in the pivot's level or above
            auto rank = static_cast<std::size_t>(std::ceil(gamma * static_cast<double>(lambda)));
            rank = std::clamp<std::size_t>(rank, 1, lambda);
            std::size_t prefix = 0;
            for (std::size_t level = counts.size(); level >= 1; --level) {
                prefix += counts[level - 1];
                if (prefix >= rank) break;
            }
            const double beta = prefix_beta(sel, lambda, prefix);
            const double margin = beta - gamma * factor;
            if (margin < res.worst_margin) {
                res.worst_margin = margin;
                res.witness = strf("gamma=%.6g %s", gamma, composition_string(counts).c_str());
            }
        }
        ++res.universe;
    };

    if (composition_count(lambda, num_levels) <=
        static_cast<double>(settings.composition_limit)) {
        enumerate_compositions(lambda, num_levels, probe);
        res.method = CheckMethod::Exhaustive;
    } else {
        // Adversarial boundary populations: the top ceil(gamma * lambda)
        // members alone at the highest level minimize beta at that gamma,
        // so sampling stays worst-case-sound.
        std::vector<std::size_t> counts(num_levels, 0);
        for (std::size_t i = 1; i <= settings.grid_points; ++i) {
            const double gamma =
                gamma0 * (static_cast<double>(i) / static_cast<double>(settings.grid_points));
            const auto top = static_cast<std::size_t>(
                std::ceil(gamma * static_cast<double>(lambda)));
            std::fill(counts.begin(), counts.end(), 0);
            counts[num_levels - 1] = top;
            counts[0] += lambda - top;
            probe(counts);
        }
        for (std::size_t s = 0; s < settings.composition_samples; ++s)
            probe(sampled_composition(lambda, num_levels, rng));
        res.method = CheckMethod::MonteCarlo;
    }
    res.pass = res.worst_margin >= 0.0;
    return res;
}

}  // namespace

const char* to_string(CheckMethod method) {
    switch (method) {
        case CheckMethod::ClosedForm: return "closed-form";
        case CheckMethod::Exhaustive: return "exhaustive";
        case CheckMethod::MonteCarlo: return "monte-carlo";
        case CheckMethod::Skipped: return "skipped";
    }
    return "unknown";
}

AnalyticBounds royal_road_bounds(std::size_t n, std::size_t r, double chi, double pc) {
    if (r == 0 || n % r != 0) throw std::invalid_argument("closed-form floors: r must divide n");
    if (!(chi > 0.0) || chi > static_cast<double>(n) / 2.0)
        throw std::invalid_argument("closed-form floors: need 0 < chi <= n/2");
    if (pc < 0.0 || pc >= 1.0) throw std::invalid_argument("closed-form floors: pc must lie in [0, 1)");
    const std::size_t m = n / r;
    const double pm = chi / static_cast<double>(n);
    const double complete_worst = bitwise_point_prob(n, pm, r);
    AnalyticBounds b;
    b.s.resize(m);
    for (std::size_t j = 1; j <= m; ++j)
        b.s[j - 1] = static_cast<double>(m - j + 1) * complete_worst;
    b.p0 = bitwise_point_prob(n, pm, 0);
    b.eps = (1.0 - pc) / 2.0;
    return b;
}

AnalyticBounds triangle_cover_bounds(std::size_t kappa, double pm, double pc) {
    if (kappa == 0) throw std::invalid_argument("closed-form floors: kappa must be positive");
    if (!(pm > 0.0) || pm > 0.5)
        throw std::invalid_argument("closed-form floors: need 0 < pm <= 1/2");
    if (pc < 0.0 || pc >= 1.0) throw std::invalid_argument("closed-form floors: pc must lie in [0, 1)");
    const std::size_t n = 3 * kappa;
    AnalyticBounds b;
    b.s.resize(kappa);
    for (std::size_t j = 1; j <= kappa; ++j)
        b.s[j - 1] = 3.0 * static_cast<double>(kappa - j + 1) * bitwise_point_prob(n, pm, 1);
    b.p0 = bitwise_point_prob(n, pm, 0);
    b.eps = (1.0 - pc) / 2.0;
    return b;
}

bool ConditionReport::all_passed() const {
    for (const auto& e : entries)
        if (!e.skipped && !e.pass) return false;
    return true;
}

const ConditionEntry* ConditionReport::find(std::string_view id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

ConditionReport check_conditions(const Problem& problem, const LevelPartition& partition,
                                 const NeighborhoodSpec& nbhd, const GAConfig& config,
                                 const CheckSettings& settings, RandomStream& rng) {
    if (!(settings.delta > 0.0))
        throw std::invalid_argument("condition check: delta must be positive");
    if (settings.grid_points == 0)
        throw std::invalid_argument("condition check: need at least one grid point");

    const std::size_t n = problem.dimension();
    const int m = partition.m();
    const std::size_t levels = static_cast<std::size_t>(m) + 1;

    ConditionReport report;
    report.m = m;
    report.lambda = config.lambda;
    report.delta = settings.delta;
    report.s_hat.assign(static_cast<std::size_t>(m), 0.0);

    ConditionEntry c1{.id = "C1"}, c2{.id = "C2"}, c2p{.id = "C2'"}, c3{.id = "C3"},
        c3p{.id = "C3'"}, c4{.id = "C4"}, c4p{.id = "C4'"}, c5{.id = "C5"}, l1{.id = "L1"},
        l2{.id = "L2"}, l3{.id = "L3"};

    double c3_measured = 0.0;
    double c3p_measured = 0.0;

    if (settings.analytic) {
        const AnalyticBounds& ab = *settings.analytic;
        if (ab.s.empty()) throw std::invalid_argument("closed-form floors: s must be non-empty");
        if (ab.s.size() != 1 && ab.s.size() != static_cast<std::size_t>(m))
            throw std::invalid_argument("closed-form floors: s must have one entry or one per level");
        for (int j = 0; j < m; ++j)
            report.s_hat[static_cast<std::size_t>(j)] =
                ab.s.size() == 1 ? ab.s[0] : ab.s[static_cast<std::size_t>(j)];
        report.p0_hat = ab.p0;
        c3_measured = ab.eps;
        c3p_measured = ab.eps;

        c1.method = CheckMethod::ClosedForm;
        c1.measured = *std::min_element(report.s_hat.begin(), report.s_hat.end());
        c1.pass = c1.measured > 0.0;
        c1.note = "per-level floors supplied in closed form";

        c2.skipped = true;
        c2.pass = true;
        c2.note = "closed-form mode reports the point-stay floor only";

        c2p.method = CheckMethod::ClosedForm;
        c2p.measured = ab.p0;
        c2p.pass = ab.p0 > 0.0;

        c3.method = CheckMethod::ClosedForm;
        c3.measured = ab.eps;
        c3.pass = ab.eps > 0.0;
        c3p.method = CheckMethod::ClosedForm;
        c3p.measured = ab.eps;
        c3p.pass = ab.eps > 0.0;

        for (ConditionEntry* e : {&l1, &l2, &l3}) {
            e->skipped = true;
            e->pass = true;
            e->note = "not measured in closed-form mode";
        }
    } else if (settings.mode == CheckSettings::Mode::Exhaustive) {
        if (n > kExhaustiveCap)
            throw std::invalid_argument(
                "condition check: exhaustive mode is capped at 12 bits; use Monte Carlo mode or "
                "closed-form floors");
        const CubeTable table = build_table(problem, partition);
        const double pm_for_table =
            config.mutation.kind() == MutationOp::Kind::RepairWrapped &&
                    config.mutation.inner() != nullptr
                ? config.mutation.inner()->pm()
                : config.mutation.pm();
        const std::vector<double> flips = flip_table(n, pm_for_table);

        // Mutation scans: upgrade, retention, point-stay.
        std::vector<double> up(levels, std::numeric_limits<double>::infinity());
        std::vector<double> keep(levels, std::numeric_limits<double>::infinity());
        std::vector<std::uint64_t> up_witness(levels, 0), keep_witness(levels, 0);
        double stay_min = std::numeric_limits<double>::infinity();
        std::uint64_t stay_witness = 0;
        for (std::uint64_t ix = 0; ix < table.size; ++ix) {
            const MutationProfile prof = mutation_profile(table, problem, config.mutation, ix, flips);
            const int lvl = table.level[ix];
            for (int j = 1; j <= m; ++j) {
                const double tail = prof.tail[static_cast<std::size_t>(j) + 1];
                if (lvl >= j && tail < up[static_cast<std::size_t>(j) - 1]) {
                    up[static_cast<std::size_t>(j) - 1] = tail;
                    up_witness[static_cast<std::size_t>(j) - 1] = ix;
                }
                if (lvl >= j + 1 && tail < keep[static_cast<std::size_t>(j) - 1]) {
                    keep[static_cast<std::size_t>(j) - 1] = tail;
                    keep_witness[static_cast<std::size_t>(j) - 1] = ix;
                }
            }
            if (prof.stay < stay_min) {
                stay_min = prof.stay;
                stay_witness = ix;
            }
        }
        for (int j = 0; j < m; ++j) report.s_hat[static_cast<std::size_t>(j)] = up[static_cast<std::size_t>(j)];
        {
            const auto it = std::min_element(up.begin(), up.begin() + m);
            const int j = static_cast<int>(it - up.begin());
            c1.method = CheckMethod::Exhaustive;
            c1.measured = *it;
            c1.pass = c1.measured > 0.0;
            c1.witness = strf("j=%d x=%s", j + 1,
                              BitString::from_index(up_witness[static_cast<std::size_t>(j)], n)
                                  .to_string()
                                  .c_str());
        }
        {
            const auto it = std::min_element(keep.begin(), keep.begin() + m);
            const int j = static_cast<int>(it - keep.begin());
            c2.method = CheckMethod::Exhaustive;
            c2.measured = *it;
            c2.pass = c2.measured > 0.0;
            c2.witness = strf("j=%d x=%s", j + 1,
                              BitString::from_index(keep_witness[static_cast<std::size_t>(j)], n)
                                  .to_string()
                                  .c_str());
            c2.note = "worst upper-set retention over occupied levels";
        }
        c2p.method = CheckMethod::Exhaustive;
        c2p.measured = stay_min;
        c2p.pass = stay_min > 0.0;
        c2p.witness = strf("x=%s", BitString::from_index(stay_witness, n).to_string().c_str());
        report.p0_hat = stay_min;

        // Crossover scan over ordered parent pairs.
        std::vector<double> cross(levels, std::numeric_limits<double>::infinity());
        std::vector<std::pair<std::uint64_t, std::uint64_t>> cross_witness(levels, {0, 0});
        std::vector<std::pair<std::uint64_t, double>> outcomes;
        std::vector<double> acc(levels + 1, 0.0);
        for (std::uint64_t iu = 0; iu < table.size; ++iu) {
            for (std::uint64_t iv = 0; iv < table.size; ++iv) {
                const int jmax = std::min(table.level[iu], table.level[iv] - 1);
                if (jmax < 1) continue;
                outcomes.clear();
                xover_outcomes(config.crossover, iu, iv, n, 1.0, outcomes);
                std::fill(acc.begin(), acc.end(), 0.0);
                for (const auto& [iz, p] : outcomes) acc[static_cast<std::size_t>(table.level[iz])] += p;
                double running = 0.0;
                for (int level = m + 1; level >= 1; --level)
                    acc[static_cast<std::size_t>(level)] = running += acc[static_cast<std::size_t>(level)];
                for (int j = 1; j <= std::min(jmax, m); ++j) {
                    const double tail = acc[static_cast<std::size_t>(j) + 1];
                    if (tail < cross[static_cast<std::size_t>(j) - 1]) {
                        cross[static_cast<std::size_t>(j) - 1] = tail;
                        cross_witness[static_cast<std::size_t>(j) - 1] = {iu, iv};
                    }
                }
            }
        }
        const auto cross_summary = [&](ConditionEntry& e, int j_limit) {
            if (j_limit < 1) {
                e.skipped = true;
                e.pass = true;
                e.note = "vacuous: no levels in range";
                return 0.0;
            }
            const auto it = std::min_element(cross.begin(), cross.begin() + j_limit);
            const int j = static_cast<int>(it - cross.begin());
            e.method = CheckMethod::Exhaustive;
            e.measured = *it;
            e.pass = e.measured > 0.0;
            const auto [iu, iv] = cross_witness[static_cast<std::size_t>(j)];
            e.witness = strf("j=%d u=%s v=%s", j + 1,
                             BitString::from_index(iu, n).to_string().c_str(),
                             BitString::from_index(iv, n).to_string().c_str());
            return e.measured;
        };
        c3_measured = cross_summary(c3, m);
        c3p_measured = cross_summary(c3p, m - 1);

        // Designated-neighbor floor over feasible strings.
        {
            double worst = std::numeric_limits<double>::infinity();
            std::uint64_t wx = 0, wy = 0;
            bool any = false;
            for (std::uint64_t ix = 0; ix < table.size; ++ix) {
                if (!table.feas[ix]) continue;
                const BitString x = BitString::from_index(ix, n);
                for (const BitString& y : nbhd.neighbors(problem, x)) {
                    const std::uint64_t iy = y.to_index();
                    const double p = point_prob(table, problem, config.mutation, ix, iy, flips);
                    if (p < worst) {
                        worst = p;
                        wx = ix;
                        wy = iy;
                    }
                    any = true;
                }
            }
            l1.method = CheckMethod::Exhaustive;
            if (!any) {
                l1.skipped = true;
                l1.pass = true;
                l1.note = "no feasible string has neighbors";
            } else {
                l1.measured = worst;
                l1.pass = worst > 0.0;
                l1.witness = strf("x=%s y=%s", BitString::from_index(wx, n).to_string().c_str(),
                                  BitString::from_index(wy, n).to_string().c_str());
            }
        }

        // Feasible-landing floor over infeasible strings.
        if (problem.all_feasible()) {
            l2.skipped = true;
            l2.pass = true;
            l2.note = "every string is feasible";
        } else {
            double worst = std::numeric_limits<double>::infinity();
            std::uint64_t wx = 0;
            bool any = false;
            for (std::uint64_t ix = 0; ix < table.size; ++ix) {
                if (table.feas[ix]) continue;
                any = true;
                double mass = 0.0;
                if (config.mutation.kind() == MutationOp::Kind::Bitwise) {
                    for (std::uint64_t iy = 0; iy < table.size; ++iy)
                        if (table.feas[iy]) mass += flips[static_cast<std::size_t>(popcount64(ix ^ iy))];
                } else {
                    // Fallback-substituting variants always land feasible.
                    mass = 1.0;
                }
                if (mass < worst) {
                    worst = mass;
                    wx = ix;
                }
            }
            l2.method = CheckMethod::Exhaustive;
            if (!any) {
                l2.skipped = true;
                l2.pass = true;
                l2.note = "every string is feasible";
            } else {
                l2.measured = worst;
                l2.pass = worst > 0.0;
                l2.witness = strf("x=%s", BitString::from_index(wx, n).to_string().c_str());
            }
        }

        // Fitness preservation under crossover.
        if (n <= kExactEpsCap) {
            l3.method = CheckMethod::Exhaustive;
            l3.measured = exact_eps0(config.crossover, problem);
            l3.pass = l3.measured > 0.0;
        } else {
            RandomStream sub = rng.substream(0x6c33);
            const EpsEstimate est = estimate_eps0(config.crossover, problem, uniform_pair_sampler(n),
                                                  settings.per_point_draws, sub);
            l3.method = CheckMethod::MonteCarlo;
            l3.measured = est.lo;
            l3.samples = est.trials;
            l3.pass = est.lo > 0.0;
            l3.note = "lower 95% confidence limit over sampled pairs";
        }
    } else {
        // Monte Carlo mode: worst cases over sampled strings and pairs.
        std::vector<std::vector<BitString>> bucket(levels + 1);
        RandomStream sampler = rng.substream(0x5a3f01);
        for (std::size_t s = 0; s < settings.string_samples; ++s) {
            BitString x(n);
            for (std::size_t b = 0; b < n; ++b) x.set(b, sampler.bernoulli(0.5));
            const int lvl = partition.level_of(problem, x);
            auto& vec = bucket[static_cast<std::size_t>(lvl)];
            if (vec.size() < settings.per_level_points) vec.push_back(std::move(x));
        }
        std::string uncovered;
        for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
            if (bucket[lvl].empty()) {
                if (!uncovered.empty()) uncovered += ",";
                uncovered += std::to_string(lvl);
            }
        }

        const auto level_tails = [&](const BitString& x, RandomStream& sub) {
            std::vector<double> tail(levels + 2, 0.0);
            std::vector<std::size_t> hist(levels + 1, 0);
            std::size_t stay = 0;
            for (std::size_t d = 0; d < settings.per_point_draws; ++d) {
                const BitString y = config.mutation.apply(problem, x, sub);
                ++hist[static_cast<std::size_t>(partition.level_of(problem, y))];
                if (y == x) ++stay;
            }
            double running = 0.0;
            for (std::size_t lvl = levels; lvl >= 1; --lvl) {
                running += static_cast<double>(hist[lvl]);
                tail[lvl] = running / static_cast<double>(settings.per_point_draws);
            }
            tail[0] = static_cast<double>(stay) / static_cast<double>(settings.per_point_draws);
            return tail;  // tail[0] abused as the point-stay share
        };

        std::vector<double> up(levels, std::numeric_limits<double>::infinity());
        std::vector<double> keep(levels, std::numeric_limits<double>::infinity());
        std::vector<std::string> up_wit(levels), keep_wit(levels);
        double stay_min = std::numeric_limits<double>::infinity();
        std::string stay_wit;
        std::uint64_t point_id = 0;
        for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
            for (const BitString& x : bucket[lvl]) {
                RandomStream sub = rng.substream(0xa100 + point_id++);
                const std::vector<double> tail = level_tails(x, sub);
                for (int j = 1; j <= m; ++j) {
                    const double t = tail[static_cast<std::size_t>(j) + 1];
                    if (static_cast<int>(lvl) >= j && t < up[static_cast<std::size_t>(j) - 1]) {
                        up[static_cast<std::size_t>(j) - 1] = t;
                        up_wit[static_cast<std::size_t>(j) - 1] = strf("j=%d x=%s", j, x.to_string().c_str());
                    }
                    if (static_cast<int>(lvl) >= j + 1 && t < keep[static_cast<std::size_t>(j) - 1]) {
                        keep[static_cast<std::size_t>(j) - 1] = t;
                        keep_wit[static_cast<std::size_t>(j) - 1] = strf("j=%d x=%s", j, x.to_string().c_str());
                    }
                }
                if (tail[0] < stay_min) {
                    stay_min = tail[0];
                    stay_wit = strf("x=%s", x.to_string().c_str());
                }
            }
        }

        bool covered = uncovered.empty();
        for (int j = 0; j < m; ++j)
            report.s_hat[static_cast<std::size_t>(j)] =
                std::isfinite(up[static_cast<std::size_t>(j)]) ? up[static_cast<std::size_t>(j)] : 0.0;
        c1.method = CheckMethod::MonteCarlo;
        c1.samples = settings.per_point_draws;
        c1.measured = *std::min_element(report.s_hat.begin(), report.s_hat.end());
        c1.pass = covered && c1.measured > 0.0;
        if (!covered) c1.note = "levels without sampled points: " + uncovered;
        {
            double worst = std::numeric_limits<double>::infinity();
            std::string wit;
            for (int j = 1; j <= m; ++j) {
                if (keep[static_cast<std::size_t>(j) - 1] < worst) {
                    worst = keep[static_cast<std::size_t>(j) - 1];
                    wit = keep_wit[static_cast<std::size_t>(j) - 1];
                }
            }
            c2.method = CheckMethod::MonteCarlo;
            c2.samples = settings.per_point_draws;
            c2.measured = std::isfinite(worst) ? worst : 0.0;
            c2.pass = covered && c2.measured > 0.0;
            c2.witness = wit;
        }
        if (config.mutation.kind() == MutationOp::Kind::Bitwise) {
            c2p.method = CheckMethod::ClosedForm;
            c2p.measured = bitwise_point_prob(n, config.mutation.pm(), 0);
            c2p.pass = c2p.measured > 0.0;
            c2p.note = "rate-only closed form";
        } else {
            c2p.method = CheckMethod::MonteCarlo;
            c2p.samples = settings.per_point_draws;
            c2p.measured = std::isfinite(stay_min) ? stay_min : 0.0;
            c2p.pass = c2p.measured > 0.0;
            c2p.witness = stay_wit;
        }
        report.p0_hat = c2p.measured;

        // Crossover: sampled ordered pairs per level index.
        std::vector<double> cross(levels, std::numeric_limits<double>::infinity());
        std::vector<std::string> cross_wit(levels);
        std::string cross_uncovered;
        RandomStream pair_picker = rng.substream(0xc3c3);
        for (int j = 1; j <= m; ++j) {
            std::vector<const BitString*> us, vs;
            for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
                for (const BitString& x : bucket[lvl]) {
                    if (static_cast<int>(lvl) >= j) us.push_back(&x);
                    if (static_cast<int>(lvl) >= j + 1) vs.push_back(&x);
                }
            }
            if (us.empty() || vs.empty()) {
                if (!cross_uncovered.empty()) cross_uncovered += ",";
                cross_uncovered += std::to_string(j);
                continue;
            }
            for (std::size_t p = 0; p < settings.per_level_points; ++p) {
                const BitString& u = *us[pair_picker.uniform_index(us.size())];
                const BitString& v = *vs[pair_picker.uniform_index(vs.size())];
                RandomStream sub = rng.substream(0xcc00 + static_cast<std::uint64_t>(j) * 1000 + p);
                std::size_t hits = 0;
                for (std::size_t d = 0; d < settings.per_point_draws; ++d) {
                    const BitString z = config.crossover.apply(u, v, sub);
                    if (partition.level_of(problem, z) >= j + 1) ++hits;
                }
                const double est =
                    static_cast<double>(hits) / static_cast<double>(settings.per_point_draws);
                if (est < cross[static_cast<std::size_t>(j) - 1]) {
                    cross[static_cast<std::size_t>(j) - 1] = est;
                    cross_wit[static_cast<std::size_t>(j) - 1] =
                        strf("j=%d u=%s v=%s", j, u.to_string().c_str(), v.to_string().c_str());
                }
            }
        }
        const auto cross_summary = [&](ConditionEntry& e, int j_limit) {
            if (j_limit < 1) {
                e.skipped = true;
                e.pass = true;
                e.note = "vacuous: no levels in range";
                return 0.0;
            }
            double worst = std::numeric_limits<double>::infinity();
            std::string wit;
            for (int j = 1; j <= j_limit; ++j) {
                if (cross[static_cast<std::size_t>(j) - 1] < worst) {
                    worst = cross[static_cast<std::size_t>(j) - 1];
                    wit = cross_wit[static_cast<std::size_t>(j) - 1];
                }
            }
            e.method = CheckMethod::MonteCarlo;
            e.samples = settings.per_point_draws;
            e.measured = std::isfinite(worst) ? worst : 0.0;
            e.pass = cross_uncovered.empty() && e.measured > 0.0;
            e.witness = wit;
            if (!cross_uncovered.empty()) e.note = "pair-starved level indices: " + cross_uncovered;
            return e.measured;
        };
        c3_measured = cross_summary(c3, m);
        c3p_measured = cross_summary(c3p, m - 1);

        // Designated-neighbor floor: closed-form point probabilities at
        // sampled feasible strings.
        {
            double worst = std::numeric_limits<double>::infinity();
            std::string wit;
            bool any = false;
            for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
                for (const BitString& x : bucket[lvl]) {
                    if (!problem.is_feasible(x)) continue;
                    for (const BitString& y : nbhd.neighbors(problem, x)) {
                        double p = 0.0;
                        switch (config.mutation.kind()) {
                            case MutationOp::Kind::Bitwise:
                                p = bitwise_mutation_prob(config.mutation.pm(), x, y);
                                break;
                            case MutationOp::Kind::NeighborhoodUniform: {
                                const auto nbrs = problem.native_neighbors(x);
                                bool in = false;
                                for (const BitString& z : nbrs)
                                    if (z == y) in = true;
                                p = in && !nbrs.empty()
                                        ? 1.0 / static_cast<double>(nbrs.size())
                                        : 0.0;
                                break;
                            }
                            case MutationOp::Kind::RepairWrapped:
                                // Lower bound: the inner pass-through mass alone.
                                p = bitwise_mutation_prob(config.mutation.inner()->pm(), x, y);
                                break;
                        }
                        if (p < worst) {
                            worst = p;
                            wit = strf("x=%s y=%s", x.to_string().c_str(), y.to_string().c_str());
                        }
                        any = true;
                    }
                }
            }
            if (!any) {
                l1.skipped = true;
                l1.pass = true;
                l1.note = "no feasible sampled string has neighbors";
            } else {
                l1.method = CheckMethod::MonteCarlo;
                l1.measured = worst;
                l1.pass = worst > 0.0;
                l1.witness = wit;
                l1.note = "exact point probabilities at sampled strings";
            }
        }

        if (problem.all_feasible()) {
            l2.skipped = true;
            l2.pass = true;
            l2.note = "every string is feasible";
        } else {
            double worst = std::numeric_limits<double>::infinity();
            std::string wit;
            bool any = false;
            std::uint64_t id = 0;
            for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
                for (const BitString& x : bucket[lvl]) {
                    if (problem.is_feasible(x)) continue;
                    any = true;
                    RandomStream sub = rng.substream(0x12f0 + id++);
                    std::size_t hits = 0;
                    for (std::size_t d = 0; d < settings.per_point_draws; ++d)
                        if (problem.is_feasible(config.mutation.apply(problem, x, sub))) ++hits;
                    const double est =
                        static_cast<double>(hits) / static_cast<double>(settings.per_point_draws);
                    if (est < worst) {
                        worst = est;
                        wit = strf("x=%s", x.to_string().c_str());
                    }
                }
            }
            if (!any) {
                l2.skipped = true;
                l2.pass = true;
                l2.note = "no infeasible string sampled";
            } else {
                l2.method = CheckMethod::MonteCarlo;
                l2.samples = settings.per_point_draws;
                l2.measured = worst;
                l2.pass = worst > 0.0;
                l2.witness = wit;
            }
        }

        {
            RandomStream sub = rng.substream(0x6c33);
            const EpsEstimate est = estimate_eps0(config.crossover, problem, uniform_pair_sampler(n),
                                                  settings.per_point_draws, sub);
            l3.method = CheckMethod::MonteCarlo;
            l3.measured = est.lo;
            l3.samples = est.trials;
            l3.pass = est.lo > 0.0;
            l3.note = "lower 95% confidence limit over sampled pairs";
        }
    }

    report.s_star = report.s_hat.empty()
                        ? 0.0
                        : *std::min_element(report.s_hat.begin(), report.s_hat.end());

    // Adopted crossover floor: the full-range check when positive, otherwise
    // the restricted one (which the target-locked engine variant justifies).
    std::string eps_note;
    report.eps_hat = c3_measured;
    if (!(report.eps_hat > 0.0) && c3p_measured > 0.0) {
        report.eps_hat = c3p_measured;
        eps_note = "crossover floor from the restricted check; pair the bound with the "
                   "target-locked engine";
    }

    // Adopted retention floor: the point-mass form when positive, otherwise
    // the upper-set form, which is what the bound actually consumes. The two
    // differ for repair-wrapped mutation, where an infeasible input is never
    // reproduced exactly but its output still lands in the lowest upper set.
    if (!(report.p0_hat > 0.0) && !c2.skipped && c2.measured > 0.0) {
        report.p0_hat = c2.measured;
        c2p.note = c2p.note.empty()
                       ? "retention floor adopted from the upper-set form"
                       : c2p.note + "; retention floor adopted from the upper-set form";
    }

    // Selection pressure threshold.
    double gamma0 = 0.0;
    if (settings.gamma0) {
        gamma0 = *settings.gamma0;
    } else if (config.selection.kind() == SelectionOp::Kind::MuLambda) {
        gamma0 = static_cast<double>(config.selection.mu()) / static_cast<double>(config.lambda);
    } else if (report.eps_hat > 0.0 && report.p0_hat > 0.0) {
        gamma0 = report.eps_hat * report.p0_hat / (4.0 * (1.0 + settings.delta));
    }
    if (gamma0 >= 1.0) gamma0 = 0.999999;
    report.gamma0 = gamma0;

    const bool floors_ok = report.p0_hat > 0.0 && report.eps_hat > 0.0 && gamma0 > 0.0;
    if (!floors_ok) {
        for (ConditionEntry* e : {&c4, &c4p, &c5}) {
            e->skipped = true;
            e->pass = false;
            e->note = "no positive probability floors to build the threshold from";
        }
    } else {
        const double factor =
            std::sqrt((1.0 + settings.delta) / (report.p0_hat * report.eps_hat * gamma0));
        RandomStream comp_rng = rng.substream(0xbe7a);
        if (partition.kind() == LevelPartition::Kind::Canonical) {
            const PressureResult r = pressure_check(config.selection, config.lambda, levels, gamma0,
                                                    factor, settings, comp_rng);
            c4.method = r.method;
            c4.measured = r.worst_margin;
            c4.threshold = factor;
            c4.pass = r.pass;
            c4.witness = r.witness;
            c4.note = strf("universe=%zu populations", r.universe);
        } else {
            c4.skipped = true;
            c4.pass = true;
            c4.note = "target level mixes objective values; see the target-free variant";
        }
        {
            RandomStream comp_rng2 = rng.substream(0xbe7b);
            const PressureResult r = pressure_check(config.selection, config.lambda,
                                                    static_cast<std::size_t>(m), gamma0, factor,
                                                    settings, comp_rng2);
            c4p.method = r.method;
            c4p.measured = r.worst_margin;
            c4p.threshold = factor;
            c4p.pass = r.pass;
            c4p.witness = r.witness;
            c4p.note = strf("universe=%zu populations", r.universe);
        }

        bool floors_complete = report.s_star > 0.0;
        if (floors_complete) {
            BoundParams params;
            params.m = m;
            params.lambda = config.lambda;
            params.s = report.s_hat;
            params.s_star = report.s_star;
            params.p0 = report.p0_hat;
            params.eps = report.eps_hat;
            params.delta = settings.delta;
            params.gamma0 = gamma0;
            params.validate();
            report.params = params;

            const PopulationSizeBound lb = population_size_bound(params);
            c5.method = CheckMethod::ClosedForm;
            c5.measured = static_cast<double>(config.lambda);
            c5.threshold = lb.value;
            c5.pass = lb.trivially_satisfied ||
                      static_cast<double>(config.lambda) >= lb.value;
            if (lb.trivially_satisfied) c5.note = "any population size suffices";
            if (!eps_note.empty()) c5.note = c5.note.empty() ? eps_note : c5.note + "; " + eps_note;
        } else {
            c5.skipped = true;
            c5.pass = false;
            c5.note = "upgrade floors incomplete; no population-size bound";
        }
    }

    report.entries = {c1, c2, c2p, c3, c3p, c4, c4p, c5, l1, l2, l3};
    return report;
}

std::string format_report(const ConditionReport& report) {
    std::string out;
    out += strf("levels m=%d lambda=%zu delta=%.6g gamma0=%.6g s*=%.6g p0=%.6g eps=%.6g\n",
                report.m, report.lambda, report.delta, report.gamma0, report.s_star, report.p0_hat,
                report.eps_hat);
    for (const auto& e : report.entries) {
        out += strf("%-4s %s  measured=%-12.6g threshold=%-12.6g method=%s", e.id.c_str(),
                    e.skipped ? "skip" : (e.pass ? "PASS" : "FAIL"), e.measured, e.threshold,
                    to_string(e.method));
        if (e.samples) out += strf(" samples=%zu", e.samples);
        if (!e.witness.empty()) out += "  " + e.witness;
        if (!e.note.empty()) out += "  (" + e.note + ")";
        out += "\n";
    }
    if (report.params) {
        out += strf("bound params assembled; expected-evaluations bound %.6g\n",
                    runtime_upper_bound(*report.params));
    } else {
        out += "bound params unavailable\n";
    }
    return out;
}

}  // namespace levelga::theory
