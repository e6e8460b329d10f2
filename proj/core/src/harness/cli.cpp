#include "levelga/harness/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "levelga/harness/experiment.hpp"
#include "levelga/harness/report.hpp"
#include "levelga/neighborhood.hpp"
#include "levelga/partition.hpp"
#include "levelga/problems/onemax.hpp"
#include "levelga/problems/royal_road.hpp"
#include "levelga/problems/toy_npo.hpp"
#include "levelga/problems/triangle_vertex_cover.hpp"
#include "levelga/theory/advisor.hpp"
#include "levelga/theory/bounds.hpp"
#include "levelga/theory/certify.hpp"
#include "levelga/theory/conditions.hpp"
#include "levelga/theory/mutation_floor.hpp"

namespace levelga::harness {

namespace {

struct ProblemOpts {
    std::string family = "rr";
    std::vector<std::size_t> sizes;
    std::size_t block = 2;
    std::string toy_file;
};

struct GaOpts {
    std::string selection = "tournament";
    int k = 0;  // 0 = advisor-driven
    int mu = 0;
    double eta = 0.0;
    double pm = -1.0;  // <0 = use chi/n
    double chi = 1.0;
    double pc = 0.0;
    std::size_t lambda = 0;  // 0 = ceil(lambda_b * ln n)
    double lambda_b = 3.0;
    double delta_prime = 1.0;
    std::string partition = "canonical";
    std::uint64_t cap = 100'000'000;
    bool lock = false;
    bool repair = false;
};

void add_problem_options(CLI::App* cmd, ProblemOpts& p) {
    cmd->add_option("--problem,--family", p.family,
                    "instance family: rr, vcp, onemax, leadingones, toy")
        ->check(CLI::IsMember({"rr", "vcp", "onemax", "leadingones", "toy"}));
    cmd->add_option("--sizes,--size", p.sizes,
                    "size parameter per instance (bits; triangles for vcp)")
        ->delimiter(',');
    cmd->add_option("--block", p.block, "block length for rr (default 2)");
    cmd->add_option("--toy-file", p.toy_file, "instance file for the toy family");
}

void add_ga_options(CLI::App* cmd, GaOpts& g) {
    cmd->add_option("--selection", g.selection, "tournament, comma or exp")
        ->check(CLI::IsMember({"tournament", "comma", "exp"}));
    cmd->add_option("--k", g.k, "tournament size (0 = advisor-driven)");
    cmd->add_option("--mu", g.mu, "parent count for comma selection");
    cmd->add_option("--eta", g.eta, "rate for exponential ranking");
    cmd->add_option("--pm", g.pm, "mutation rate (overrides --chi)");
    cmd->add_option("--chi", g.chi, "mutation rate numerator: pm = chi / n (default 1)");
    cmd->add_option("--pc", g.pc, "crossover probability (default 0)")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--lambda", g.lambda, "population size (overrides --lambda-b)");
    cmd->add_option("--lambda-b", g.lambda_b, "population rule lambda = ceil(b ln n), default b=3");
    cmd->add_option("--delta-prime", g.delta_prime, "advisor slack (default 1)");
    cmd->add_option("--partition", g.partition, "canonical, merged or general")
        ->check(CLI::IsMember({"canonical", "merged", "general"}));
    cmd->add_option("--cap", g.cap, "censoring cap in evaluations (default 1e8)");
    cmd->add_flag("--lock", g.lock, "deterministic handling of target-level members");
    cmd->add_flag("--repair", g.repair, "wrap mutation with infeasibility repair");
}

std::unique_ptr<Problem> build_problem(const ProblemOpts& p, std::size_t size) {
    if (p.family == "rr") return std::make_unique<RoyalRoad>(size, p.block);
    if (p.family == "vcp") return std::make_unique<TriangleVertexCover>(size);
    if (p.family == "onemax") return std::make_unique<OneMax>(size);
    if (p.family == "leadingones") return std::make_unique<LeadingOnes>(size);
    if (p.family == "toy") {
        if (p.toy_file.empty())
            throw std::invalid_argument("the toy family needs --toy-file");
        return std::make_unique<ToyNpo>(ToyNpo::from_file(p.toy_file));
    }
    throw std::invalid_argument("unknown family: " + p.family);
}

GAConfig build_config(const GaOpts& g, const Problem& problem) {
    const std::size_t n = problem.dimension();
    const double pm = g.pm >= 0.0 ? g.pm : g.chi / static_cast<double>(n);

    GAConfig config;
    config.lambda = g.lambda
                        ? g.lambda
                        : std::max<std::size_t>(
                              2, static_cast<std::size_t>(
                                     std::ceil(g.lambda_b * std::log(static_cast<double>(n)))));
    if (g.selection == "tournament") {
        int k = g.k;
        if (k <= 0) {
            const double eps = (1.0 - g.pc) / 2.0;
            const double p0 = theory::bitwise_point_prob(n, pm, 0);
            k = theory::selection_advisor(eps, p0, g.delta_prime).k_min;
        }
        config.selection = SelectionOp::tournament(k);
    } else if (g.selection == "comma") {
        if (g.mu <= 0) throw std::invalid_argument("comma selection needs --mu");
        config.selection = SelectionOp::mu_lambda(g.mu);
    } else {
        if (!(g.eta > 0.0)) throw std::invalid_argument("exponential ranking needs --eta > 0");
        config.selection = SelectionOp::exp_ranking(g.eta);
    }
    config.crossover = CrossoverOp::single_point(g.pc);
    config.mutation =
        g.repair ? MutationOp::repair_wrapped(MutationOp::bitwise(pm)) : MutationOp::bitwise(pm);
    config.max_evaluations = g.cap;
    config.lock_target = g.lock;
    return config;
}

PartitionChoice parse_partition(const std::string& name) {
    if (name == "canonical") return PartitionChoice::Canonical;
    if (name == "merged") return PartitionChoice::MergedLocalOptima;
    return PartitionChoice::General;
}

LevelPartition build_partition_direct(const Problem& problem, const NeighborhoodSpec& nbhd,
                                      const std::string& name) {
    if (name == "canonical") return canonical_partition(problem);
    if (name == "merged") return merged_local_optima_partition(problem, nbhd);
    return general_partition(problem, nbhd);
}

// Config files hold one key=value pair per line, '#' starting a comment.
// Pairs only fill in options absent from the command line; explicit flags
// always win. Appending synthesized long options keeps one parser in charge.
void expand_config_args(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);

    static const std::vector<std::vector<std::string>> kAliasGroups = {{"problem", "family"},
                                                                       {"sizes", "size"}};
    const auto trim = [](const std::string& s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const auto names_of = [](const std::string& key) {
        for (const auto& group : kAliasGroups)
            if (std::find(group.begin(), group.end(), key) != group.end()) return group;
        return std::vector<std::string>{key};
    };
    const auto mentions = [&](const std::vector<std::string>& pool, const std::string& key) {
        for (const std::string& name : names_of(key))
            for (const std::string& a : pool)
                if (a == "--" + name || a.rfind("--" + name + "=", 0) == 0) return true;
        return false;
    };

    std::string line;
    std::vector<std::string> extra;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (!trim(line).empty())
                throw std::runtime_error("config: expected key=value, got '" + trim(line) + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        if (key.empty() || key == "config") continue;
        if (mentions(args, key) || mentions(extra, key)) continue;
        extra.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
    }
    args.insert(args.end(), extra.begin(), extra.end());
}

ExperimentSpec build_spec(const ProblemOpts& p, const GaOpts& g, std::size_t trials,
                          std::uint64_t seed, std::size_t threads) {
    ExperimentSpec spec;
    spec.family = p.family;
    spec.sizes = p.sizes;
    spec.trials = trials;
    spec.seed = seed;
    spec.threads = threads;
    spec.partition = parse_partition(g.partition);
    const ProblemOpts pc = p;
    const GaOpts gc = g;
    spec.make_problem = [pc](std::size_t size) { return build_problem(pc, size); };
    spec.make_config = [gc](const Problem& problem) { return build_config(gc, problem); };
    return spec;
}

void emit(std::ostream& out, const ExperimentResult& result, const std::string& format,
          const std::string& out_path, const std::string& trials_path,
          const std::optional<ScalingFit>& fit) {
    const std::string body = format == "json" ? to_json(result, fit) : to_csv(result);
    out << body;
    if (!out_path.empty()) write_text_file(out_path, body);
    if (!trials_path.empty()) write_text_file(trials_path, to_trials_csv(result));
}

BitString parse_bits(const std::string& s) {
    return BitString::from_string(s);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"level-based runtime workbench for non-elitist genetic algorithms"};
    app.require_subcommand(0, 1);

    ProblemOpts prob;
    GaOpts ga;
    std::size_t trials = 30;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
    std::string out_path, trials_path, format = "csv", config_path;

    const auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--trials", trials, "trials per size (default 30)");
        cmd->add_option("--seed", seed, "master seed (default 1)");
        cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
        cmd->add_option("--out", out_path, "write the summary table here");
        cmd->add_option("--trials-out", trials_path, "write the raw per-trial table here");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--config", config_path,
                        "key=value file supplying defaults for unset options");
    };

    CLI::App* run = app.add_subcommand("run", "run one experiment and print per-size statistics");
    add_problem_options(run, prob);
    add_ga_options(run, ga);
    add_io(run);

    double assert_slope = 0.0;
    CLI::App* scale = app.add_subcommand("scale", "scaling study with a log-log regression");
    add_problem_options(scale, prob);
    add_ga_options(scale, ga);
    add_io(scale);
    scale->add_option("--assert-slope", assert_slope,
                      "exit 3 when the fitted slope exceeds this");

    double adv_eps = 1.0, adv_p0 = 1.0, adv_delta = 1.0;
    CLI::App* advise = app.add_subcommand("advise", "selection thresholds from eps, p0, delta");
    advise->add_option("--eps", adv_eps, "crossover preservation floor")->required();
    advise->add_option("--p0", adv_p0, "mutation stay floor")->required();
    advise->add_option("--delta-prime", adv_delta, "slack (default 1)");

    int bnd_m = 1;
    std::size_t bnd_lambda = 2;
    std::vector<double> bnd_s;
    double bnd_s_star = 0.0, bnd_p0 = 1.0, bnd_eps = 1.0, bnd_delta = 1.0, bnd_gamma0 = 0.25;
    CLI::App* bound = app.add_subcommand("bound", "evaluate the runtime and population bounds");
    bound->add_option("--m", bnd_m, "number of non-target levels")->required();
    bound->add_option("--lambda", bnd_lambda, "population size")->required();
    bound->add_option("--s", bnd_s, "per-level upgrade floors (one value or m values)")
        ->required();
    bound->add_option("--s-star", bnd_s_star, "floor of the s values (default: their minimum)");
    bound->add_option("--p0", bnd_p0, "stay probability");
    bound->add_option("--eps", bnd_eps, "crossover preservation floor");
    bound->add_option("--delta", bnd_delta, "slack");
    bound->add_option("--gamma0", bnd_gamma0, "selection-pressure threshold");

    std::string chk_mode = "exact";
    double chk_delta = 1.0, chk_gamma0 = 0.0;
    bool chk_analytic = false;
    int reach_radius = 0;
    CLI::App* check = app.add_subcommand("check", "verify the guarantee's requirements");
    add_problem_options(check, prob);
    add_ga_options(check, ga);
    check->add_option("--mode", chk_mode, "exact or mc")->check(CLI::IsMember({"exact", "mc"}));
    check->add_option("--delta", chk_delta, "slack (default 1)");
    check->add_option("--gamma0", chk_gamma0, "override the derived threshold");
    check->add_flag("--analytic", chk_analytic, "use closed-form floors (rr and vcp only)");
    check->add_option("--reach-floor", reach_radius,
                      "check the mutation reach floor at this radius instead");
    check->add_option("--seed", seed, "stream seed for sampled checks");

    std::string ls_start;
    std::size_t ls_radius = 0;
    CLI::App* localsearch =
        app.add_subcommand("localsearch", "first-improvement baseline over the neighborhood");
    add_problem_options(localsearch, prob);
    localsearch->add_option("--start", ls_start, "start point (bit string; default: all starts)");
    localsearch->add_option("--radius", ls_radius, "neighborhood radius (0 = problem native)");

    std::string cert_x;
    std::size_t cert_radius = 0;
    bool cert_from_ls = false;
    CLI::App* certify = app.add_subcommand("certify", "approximation quality of a local optimum");
    add_problem_options(certify, prob);
    certify->add_option("--x", cert_x, "the point to certify (bit string)");
    certify->add_option("--radius", cert_radius, "neighborhood radius (0 = problem native)");
    certify->add_flag("--from-localsearch", cert_from_ls,
                      "run local search from --x first, certify the optimum it finds");

    std::vector<std::string> full_args = args;
    try {
        expand_config_args(full_args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    std::vector<const char*> argv;
    argv.reserve(full_args.size() + 1);
    argv.push_back("levelga");
    for (const std::string& a : full_args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }
    if (app.get_subcommands().empty()) {
        err << app.help();
        return 1;
    }

    try {
        if (app.got_subcommand(run)) {
            if (prob.sizes.empty()) {
                if (prob.family != "toy") throw std::invalid_argument("run needs --sizes");
                prob.sizes = {build_problem(prob, 0)->dimension()};
            }
            const ExperimentResult result =
                run_experiment(build_spec(prob, ga, trials, seed, threads));
            emit(out, result, format, out_path, trials_path, std::nullopt);
        } else if (app.got_subcommand(scale)) {
            const ScalingReport report = scaling_study(build_spec(prob, ga, trials, seed, threads));
            emit(out, report.result, format, out_path, trials_path, report.fit);
            if (format != "json") {
                out << "slope=" << format_double(report.fit.slope)
                    << " stderr=" << format_double(report.fit.slope_stderr)
                    << " intercept=" << format_double(report.fit.intercept) << "\n";
                if (report.fit.nlnln_valid)
                    out << "nlnln_constant=" << format_double(report.fit.nlnln_constant) << "\n";
            }
            if (scale->count("--assert-slope") && report.fit.slope > assert_slope) {
                err << "slope " << format_double(report.fit.slope) << " exceeds "
                    << format_double(assert_slope) << "\n";
                return 3;
            }
        } else if (app.got_subcommand(advise)) {
            const theory::SelectionAdvice a =
                theory::selection_advisor(adv_eps, adv_p0, adv_delta);
            out << "k_min=" << a.k_min << "\n"
                << "mu_ratio_min=" << format_double(a.mu_ratio_min) << "\n"
                << "eta_min=" << format_double(a.eta_min) << "\n"
                << "gamma0=" << format_double(a.gamma0) << "\n"
                << "delta=" << format_double(a.delta_adopted) << "\n";
        } else if (app.got_subcommand(bound)) {
            theory::BoundParams params;
            params.m = bnd_m;
            params.lambda = bnd_lambda;
            params.s = bnd_s.size() == 1 && bnd_m > 1
                           ? std::vector<double>(static_cast<std::size_t>(bnd_m), bnd_s[0])
                           : bnd_s;
            params.s_star = bound->count("--s-star")
                                ? bnd_s_star
                                : *std::min_element(params.s.begin(), params.s.end());
            params.p0 = bnd_p0;
            params.eps = bnd_eps;
            params.delta = bnd_delta;
            params.gamma0 = bnd_gamma0;
            out << "bound=" << format_double(theory::runtime_upper_bound(params)) << "\n";
            const theory::PopulationSizeBound lb = theory::population_size_bound(params);
            out << "lambda_min=" << format_double(lb.value)
                << (lb.trivially_satisfied ? " (any population size suffices)" : "") << "\n";
        } else if (app.got_subcommand(check)) {
            if (prob.sizes.size() != 1 && prob.family != "toy")
                throw std::invalid_argument("check needs exactly one --size");
            const std::size_t size = prob.sizes.empty() ? 0 : prob.sizes[0];
            if (reach_radius > 0) {
                const std::unique_ptr<Problem> problem = build_problem(prob, size);
                const theory::MutationFloor floor =
                    theory::mutation_reach_floor(problem->dimension(), reach_radius);
                out << "n=" << floor.n << " radius=" << floor.radius
                    << " rate=" << format_double(floor.rate)
                    << " exact=" << format_double(floor.exact)
                    << " closed_form=" << format_double(floor.closed_form)
                    << " stay_exact=" << format_double(floor.stay_exact)
                    << " stay_lower=" << format_double(floor.stay_lower)
                    << " pass=" << (floor.exact >= floor.closed_form ? "yes" : "no") << "\n";
                return 0;
            }
            const std::unique_ptr<Problem> problem = build_problem(prob, size);
            const NeighborhoodSpec nbhd = NeighborhoodSpec::hamming(problem->neighborhood_radius());
            const LevelPartition partition = build_partition_direct(*problem, nbhd, ga.partition);
            const GAConfig config = build_config(ga, *problem);
            theory::CheckSettings settings;
            settings.mode = chk_mode == "mc" ? theory::CheckSettings::Mode::MonteCarlo
                                             : theory::CheckSettings::Mode::Exhaustive;
            settings.delta = chk_delta;
            if (chk_gamma0 > 0.0) settings.gamma0 = chk_gamma0;
            if (chk_analytic) {
                const double pm =
                    ga.pm >= 0.0 ? ga.pm : ga.chi / static_cast<double>(problem->dimension());
                if (prob.family == "rr")
                    settings.analytic = theory::royal_road_bounds(
                        problem->dimension(), prob.block, pm * static_cast<double>(problem->dimension()),
                        ga.pc);
                else if (prob.family == "vcp")
                    settings.analytic = theory::triangle_cover_bounds(size, pm, ga.pc);
                else
                    throw std::invalid_argument("--analytic covers rr and vcp only");
            }
            RandomStream rng(seed);
            const theory::ConditionReport report =
                check_conditions(*problem, partition, nbhd, config, settings, rng);
            out << format_report(report);
        } else if (app.got_subcommand(localsearch)) {
            if (prob.sizes.empty() && prob.family != "toy")
                throw std::invalid_argument("localsearch needs --sizes");
            const std::size_t size = prob.sizes.empty() ? 0 : prob.sizes[0];
            const std::unique_ptr<Problem> problem = build_problem(prob, size);
            const NeighborhoodSpec nbhd = NeighborhoodSpec::hamming(
                ls_radius ? ls_radius : problem->neighborhood_radius());
            if (!ls_start.empty()) {
                const LocalSearchResult res = local_search(*problem, nbhd, parse_bits(ls_start));
                out << "start=" << ls_start << " optimum=" << res.optimum.to_string()
                    << " objective=" << problem->objective(res.optimum)
                    << " moves=" << res.moves << "\n";
            } else {
                const std::size_t n = problem->dimension();
                if (n > 12)
                    throw std::invalid_argument(
                        "exhaustive localsearch is capped at 12 bits; give --start");
                std::size_t optima = 0, max_moves = 0;
                for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
                    const BitString x = BitString::from_index(i, n);
                    if (!problem->is_feasible(x)) continue;
                    if (is_local_optimum(*problem, nbhd, x)) ++optima;
                    const LocalSearchResult res = local_search(*problem, nbhd, x);
                    max_moves = std::max(max_moves, res.moves);
                }
                out << "n=" << n << " local_optima=" << optima << " max_moves=" << max_moves
                    << "\n";
            }
        } else if (app.got_subcommand(certify)) {
            if (cert_x.empty()) throw std::invalid_argument("certify needs --x");
            const std::size_t size = prob.sizes.empty() ? 0 : prob.sizes[0];
            const std::unique_ptr<Problem> problem = build_problem(prob, size);
            const NeighborhoodSpec nbhd = NeighborhoodSpec::hamming(
                cert_radius ? cert_radius : problem->neighborhood_radius());
            BitString x = parse_bits(cert_x);
            if (cert_from_ls) x = local_search(*problem, nbhd, x).optimum;
            const theory::CertifyResult res = theory::certify_approximation(*problem, nbhd, x);
            out << "x=" << x.to_string() << " value=" << res.value << " optimum=" << res.optimum
                << " ratio=" << format_double(res.ratio)
                << " local_optimum=" << (res.is_local_optimum ? "yes" : "no") << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace levelga::harness
