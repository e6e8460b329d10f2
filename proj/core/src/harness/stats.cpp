#include "levelga/harness/stats.hpp"

#include <gsl/gsl_cdf.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace levelga::harness {

double mean(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("mean: empty sample");
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median: empty sample");
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

namespace {

double sample_sd(const std::vector<double>& v, double mu) {
    double ss = 0.0;
    for (double x : v) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double t_quantile(double p, double dof) { return gsl_cdf_tdist_Pinv(p, dof); }

}  // namespace

MeanCI mean_ci(const std::vector<double>& v, double confidence) {
    if (v.empty()) throw std::invalid_argument("mean_ci: empty sample");
    if (!(confidence > 0.0) || confidence >= 1.0)
        throw std::invalid_argument("mean_ci: confidence must lie in (0, 1)");
    MeanCI ci;
    ci.n = v.size();
    ci.mean = mean(v);
    if (v.size() == 1) {
        ci.lo = ci.hi = ci.mean;
        ci.degenerate = true;
        return ci;
    }
    const double t = t_quantile(0.5 + confidence / 2.0, static_cast<double>(v.size() - 1));
    const double half = t * sample_sd(v, ci.mean) / std::sqrt(static_cast<double>(v.size()));
    ci.lo = ci.mean - half;
    ci.hi = ci.mean + half;
    return ci;
}

double mean_upper_cl(const std::vector<double>& v, double confidence) {
    if (v.size() < 2) throw std::invalid_argument("mean_upper_cl: need at least two samples");
    const double mu = mean(v);
    const double t = t_quantile(confidence, static_cast<double>(v.size() - 1));
    return mu + t * sample_sd(v, mu) / std::sqrt(static_cast<double>(v.size()));
}

OlsFit ols(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("ols: size mismatch");
    if (xs.size() < 2) throw std::invalid_argument("ols: need at least two points");
    const auto n = static_cast<double>(xs.size());
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("ols: degenerate abscissa");
    OlsFit fit;
    fit.n = xs.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (xs.size() >= 3) {
        double rss = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
            rss += r * r;
        }
        fit.slope_stderr = std::sqrt(rss / (n - 2.0) / sxx);
    } else {
        fit.slope_stderr = std::numeric_limits<double>::quiet_NaN();
    }
    return fit;
}

double through_origin_constant(const std::vector<double>& g, const std::vector<double>& y) {
    if (g.size() != y.size()) throw std::invalid_argument("origin fit: size mismatch");
    if (g.empty()) throw std::invalid_argument("origin fit: empty sample");
    double gg = 0.0, gy = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        gg += g[i] * g[i];
        gy += g[i] * y[i];
    }
    if (gg == 0.0) throw std::invalid_argument("origin fit: degenerate regressor");
    return gy / gg;
}

double chi_square_tail(double statistic, double dof) {
    if (statistic < 0.0 || !(dof > 0.0)) throw std::invalid_argument("chi-square: bad inputs");
    return gsl_cdf_chisq_Q(statistic, dof);
}

}  // namespace levelga::harness
