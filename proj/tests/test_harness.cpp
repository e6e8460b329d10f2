#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "levelga/harness/cli.hpp"
#include "levelga/harness/experiment.hpp"
#include "levelga/harness/report.hpp"
#include "levelga/harness/stats.hpp"
#include "levelga/problems/onemax.hpp"

using namespace levelga;
using namespace levelga::harness;

namespace {

std::vector<double> one_to_ten() {
    return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
}

ExperimentSpec onemax_spec(std::vector<std::size_t> sizes, std::size_t trials,
                           std::uint64_t seed, std::size_t threads) {
    ExperimentSpec spec;
    spec.family = "onemax";
    spec.sizes = std::move(sizes);
    spec.trials = trials;
    spec.seed = seed;
    spec.threads = threads;
    spec.make_problem = [](std::size_t n) { return std::make_unique<OneMax>(n); };
    spec.make_config = [](const Problem& problem) {
        GAConfig config;
        config.lambda = 8;
        config.selection = SelectionOp::tournament(8);
        config.crossover = CrossoverOp::single_point(0.0);
        config.mutation = MutationOp::bitwise(1.0 / static_cast<double>(problem.dimension()));
        config.max_evaluations = 500'000;
        return config;
    };
    return spec;
}

ExperimentResult synthetic_result() {
    ExperimentResult result;
    SizeStats a;
    a.family = "rr";
    a.size = 16;
    a.n = 16;
    a.lambda = 7;
    a.sel_param = 47;
    a.pm = 0.0625;
    a.pc = 0.0;
    a.trials = 3;
    a.censored = 0;
    a.mean_t = 112.0;
    a.median_t = 98.0;
    a.ci_lo = 80.5;
    a.ci_hi = 143.5;
    a.raw = {98, 126, 112};
    a.censored_flags = {0, 0, 0};
    result.rows.push_back(a);

    SizeStats b;
    b.family = "vcp";
    b.size = 2;
    b.n = 6;
    b.lambda = 4;
    b.sel_param = 3;
    b.pm = 0.1;
    b.pc = 0.5;
    b.trials = 1;
    b.censored = 1;
    b.mean_t = std::numeric_limits<double>::quiet_NaN();
    b.median_t = std::numeric_limits<double>::quiet_NaN();
    b.ci_lo = std::numeric_limits<double>::quiet_NaN();
    b.ci_hi = std::numeric_limits<double>::quiet_NaN();
    b.ci_degenerate = true;
    b.raw = {1000};
    b.censored_flags = {1};
    result.rows.push_back(b);
    return result;
}

std::string temp_file(const char* stem) {
    return (std::filesystem::temp_directory_path() /
            (std::string("levelga-test-") + stem + "-" + std::to_string(::getpid())))
        .string();
}

int dispatch(const std::vector<std::string>& args, std::string* out_text = nullptr,
             std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli_dispatch(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("summary statistics") {
    CHECK(mean(one_to_ten()) == 5.5);
    CHECK(median(one_to_ten()) == 5.5);
    CHECK(median({3, 1, 2}) == 2.0);
    CHECK(median({4}) == 4.0);
}

TEST_CASE("confidence intervals for the mean") {
    const MeanCI ci = mean_ci(one_to_ten());
    CHECK(ci.mean == 5.5);
    CHECK(ci.n == 10);
    CHECK_FALSE(ci.degenerate);
    CHECK(ci.lo == doctest::Approx(3.3341494103318304).epsilon(1e-12));
    CHECK(ci.hi == doctest::Approx(7.6658505896681696).epsilon(1e-12));
    CHECK(mean_upper_cl(one_to_ten()) == doctest::Approx(7.2550720133038001).epsilon(1e-12));

    const MeanCI single = mean_ci({42.0});
    CHECK(single.degenerate);
    CHECK(single.lo == 42.0);
    CHECK(single.hi == 42.0);
}

TEST_CASE("least squares") {
    const OlsFit fit = ols({1, 2, 3, 4}, {2.1, 3.9, 6.2, 7.8});
    CHECK(fit.slope == doctest::Approx(1.94).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(0.15).epsilon(1e-10));
    CHECK(fit.slope_stderr == doctest::Approx(0.09055385138137617).epsilon(1e-10));
    CHECK(fit.n == 4);

    const OlsFit exact = ols({1, 2, 3, 4, 5}, {3, 5, 7, 9, 11});  // y = 2x + 1
    CHECK(exact.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(exact.intercept == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(exact.slope_stderr == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));

    CHECK(std::isnan(ols({1, 2}, {1, 2}).slope_stderr));

    CHECK(through_origin_constant({1, 2, 3}, {2, 4, 6}) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("chi-square tail probabilities") {
    CHECK(chi_square_tail(5.0, 3.0) == doctest::Approx(0.1717971442967335).epsilon(1e-12));
    CHECK(chi_square_tail(2.5, 7.0) == doctest::Approx(0.9270970650134738).epsilon(1e-12));
}

TEST_CASE("shortest-round-trip number rendering") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(47.0) == "47");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    for (double v : {0.1 + 0.2, 1.0 / 3.0, 1e300, 18826.88035906878, 5e-324}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("summary table round trip") {
    const ExperimentResult result = synthetic_result();
    const std::string csv = to_csv(result);
    CHECK(csv ==
          "family,n,lambda,k_or_mu_or_eta,p_m,p_c,trials,censored,mean_T,median_T,ci_lo,ci_hi\n"
          "rr,16,7,47,0.0625,0,3,0,112,98,80.5,143.5\n"
          "vcp,6,4,3,0.1,0.5,1,1,nan,nan,nan,nan\n");

    const ExperimentResult parsed = parse_csv(csv);
    REQUIRE(parsed.rows.size() == 2);
    CHECK(parsed.rows[0].family == "rr");
    CHECK(parsed.rows[0].n == 16);
    CHECK(parsed.rows[0].lambda == 7);
    CHECK(parsed.rows[0].sel_param == 47.0);
    CHECK(parsed.rows[0].mean_t == 112.0);
    CHECK(parsed.rows[0].ci_hi == 143.5);
    CHECK(parsed.rows[1].censored == 1);
    CHECK(std::isnan(parsed.rows[1].mean_t));
    CHECK(to_csv(parsed) == csv);

    CHECK_THROWS_AS((void)parse_csv("foo,bar\n1,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)parse_csv(
            "family,n,lambda,k_or_mu_or_eta,p_m,p_c,trials,censored,mean_T,median_T,ci_lo,ci_hi\n"
            "rr,1,2\n"),
        std::invalid_argument);
}

TEST_CASE("per-trial table and json document") {
    const ExperimentResult result = synthetic_result();
    const std::string trials = to_trials_csv(result);
    CHECK(trials ==
          "family,n,trial,T,censored\n"
          "rr,16,0,98,0\n"
          "rr,16,1,126,0\n"
          "rr,16,2,112,0\n"
          "vcp,6,0,1000,1\n");

    ScalingFit fit;
    fit.slope = 2.5;
    fit.slope_stderr = 0.125;
    fit.intercept = 1.5;
    fit.nlnln_constant = 7.0;
    fit.nlnln_valid = true;
    const nlohmann::json doc = nlohmann::json::parse(to_json(result, fit));
    REQUIRE(doc.contains("rows"));
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["mean_T"] == 112.0);
    CHECK(doc["rows"][0]["T"].size() == 3);
    CHECK(doc["rows"][1]["censored"] == 1);
    CHECK(doc["rows"][1]["mean_T"].is_null());  // NaN has no json literal
    CHECK(doc["fit"]["slope"] == 2.5);
    CHECK(doc["fit"]["nlnln_valid"] == true);

    const nlohmann::json bare = nlohmann::json::parse(to_json(result));
    CHECK_FALSE(bare.contains("fit"));
}

TEST_CASE("experiment results do not depend on the worker count") {
    const ExperimentResult serial = run_experiment(onemax_spec({8, 10}, 6, 4242, 1));
    const ExperimentResult pooled = run_experiment(onemax_spec({8, 10}, 6, 4242, 4));
    CHECK(to_csv(serial) == to_csv(pooled));
    REQUIRE(serial.rows.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(serial.rows[i].raw == pooled.rows[i].raw);
        CHECK(serial.rows[i].censored_flags == pooled.rows[i].censored_flags);
    }

    const SizeStats& row = serial.rows[0];
    CHECK(row.n == 8);
    CHECK(row.lambda == 8);
    CHECK(row.sel_param == 8.0);
    CHECK(row.pm == 0.125);
    CHECK(row.pc == 0.0);
    CHECK(row.trials == 6);
    REQUIRE(row.raw.size() == 6);
    if (row.censored == 0) {
        CHECK(row.mean_t == doctest::Approx(mean(row.raw)).epsilon(1e-12));
        CHECK(row.ci_lo <= row.mean_t);
        CHECK(row.ci_hi >= row.mean_t);
    }
}

TEST_CASE("experiment spec validation") {
    auto spec = onemax_spec({8, 10}, 6, 1, 1);
    CHECK_NOTHROW(spec.validate());
    spec.sizes = {};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = onemax_spec({10, 8}, 6, 1, 1);  // not increasing
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = onemax_spec({8, 10}, 0, 1, 1);
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = onemax_spec({8, 10}, 6, 1, 1);
    spec.make_problem = nullptr;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("scaling fit recovers synthetic laws") {
    auto row = [](std::size_t n, double mean_t) {
        SizeStats r;
        r.n = n;
        r.size = n;
        r.trials = 5;
        r.censored = 0;
        r.mean_t = mean_t;
        return r;
    };

    std::vector<SizeStats> cubic;
    for (std::size_t n : {16, 32, 64, 128})
        cubic.push_back(row(n, 5.0 * static_cast<double>(n * n * n)));
    const ScalingFit fit = fit_scaling(cubic);
    CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.intercept == doctest::Approx(std::log(5.0)).epsilon(1e-9));

    std::vector<SizeStats> quasilinear;
    for (std::size_t n : {16, 32, 64, 128}) {
        const double nn = static_cast<double>(n);
        quasilinear.push_back(row(n, 7.0 * nn * std::log(nn) * std::log(std::log(nn))));
    }
    const ScalingFit qfit = fit_scaling(quasilinear);
    CHECK(qfit.nlnln_valid);
    CHECK(qfit.nlnln_constant == doctest::Approx(7.0).epsilon(1e-9));

    CHECK_THROWS_AS((void)fit_scaling({row(16, 10.0), row(32, 20.0)}), std::invalid_argument);

    std::vector<SizeStats> with_zero = cubic;
    with_zero[1].mean_t = 0.0;  // every trial hit at initialization
    CHECK_THROWS_AS((void)fit_scaling(with_zero), std::runtime_error);

    std::vector<SizeStats> blocked = cubic;
    blocked[2].censored = blocked[2].trials;
    blocked[2].mean_t = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)fit_scaling(blocked), std::runtime_error);
}

TEST_CASE("cli prints the advisor and bound numbers") {
    std::string out;
    CHECK(dispatch({"advise", "--eps", "0.5", "--p0", "0.5"}, &out) == 0);
    CHECK(out.find("k_min=32\n") != std::string::npos);
    CHECK(out.find("mu_ratio_min=8\n") != std::string::npos);
    CHECK(out.find("eta_min=32\n") != std::string::npos);
    CHECK(out.find("gamma0=0.03125\n") != std::string::npos);

    CHECK(dispatch({"bound", "--m", "1", "--lambda", "10", "--s", "1", "--p0", "1", "--eps", "1",
                    "--delta", "1", "--gamma0", "0.25"},
                   &out) == 0);
    CHECK(out.find("bound=18826.88035906878\n") != std::string::npos);
    CHECK(out.find("lambda_min=412.22765946198973\n") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    std::string out, err;
    CHECK(dispatch({"--help"}, &out) == 0);
    CHECK(out.find("run") != std::string::npos);

    CHECK(dispatch({}, &out, &err) == 1);                       // no subcommand
    CHECK(dispatch({"--no-such-flag"}, &out, &err) == 1);       // unknown flag
    CHECK(dispatch({"frobnicate"}, &out, &err) == 1);           // unknown subcommand
    CHECK(dispatch({"run", "--problem", "onemax"}, &out, &err) == 2);  // missing sizes
    CHECK(err.find("sizes") != std::string::npos);

    CHECK(dispatch({"run", "--problem", "onemax", "--sizes", "6", "--trials", "2", "--lambda",
                    "4", "--k", "2", "--cap", "4000", "--seed", "3"},
                   &out) == 0);
    CHECK(out.rfind("family,n,lambda,", 0) == 0);

    // a tiny slope ceiling must trip the assertion exit
    CHECK(dispatch({"scale", "--problem", "onemax", "--sizes", "8,10,12", "--trials", "3", "--k",
                    "4", "--seed", "7", "--assert-slope", "0.0001"},
                   &out, &err) == 3);
    CHECK(err.find("exceeds") != std::string::npos);
}

TEST_CASE("cli writes the requested files") {
    const std::string out_path = temp_file("summary");
    const std::string trials_path = temp_file("trials");
    std::string out;
    CHECK(dispatch({"run", "--problem", "onemax", "--sizes", "6", "--trials", "4", "--lambda",
                    "4", "--k", "2", "--cap", "4000", "--seed", "3", "--out", out_path,
                    "--trials-out", trials_path},
                   &out) == 0);

    std::ifstream summary(out_path);
    REQUIRE(summary.good());
    std::stringstream summary_text;
    summary_text << summary.rdbuf();
    CHECK(summary_text.str() == out);
    const ExperimentResult parsed = parse_csv(summary_text.str());
    REQUIRE(parsed.rows.size() == 1);
    CHECK(parsed.rows[0].trials == 4);

    std::ifstream trials(trials_path);
    REQUIRE(trials.good());
    std::size_t lines = 0;
    std::string line;
    while (std::getline(trials, line)) ++lines;
    CHECK(lines == 5);  // header + one row per trial

    std::filesystem::remove(out_path);
    std::filesystem::remove(trials_path);

    CHECK(dispatch({"run", "--problem", "onemax", "--sizes", "6", "--trials", "2", "--lambda",
                    "4", "--k", "2", "--cap", "4000", "--seed", "3", "--format", "json"},
                   &out) == 0);
    const nlohmann::json doc = nlohmann::json::parse(out);
    CHECK(doc["rows"].size() == 1);
}

TEST_CASE("cli reads options from a config file") {
    const std::string config_path = temp_file("config");
    {
        std::ofstream config(config_path);
        config << "problem=onemax\n"
               << "sizes=6\n"
               << "trials=2\n"
               << "lambda=4\n"
               << "k=2\n"
               << "cap=4000\n"
               << "seed=3\n";
    }
    std::string direct, via_file;
    CHECK(dispatch({"run", "--problem", "onemax", "--sizes", "6", "--trials", "2", "--lambda",
                    "4", "--k", "2", "--cap", "4000", "--seed", "3"},
                   &direct) == 0);
    CHECK(dispatch({"run", "--config", config_path}, &via_file) == 0);
    CHECK(via_file == direct);
    std::filesystem::remove(config_path);
}

TEST_SUITE_END();
