#pragma once

#include <cstddef>
#include <vector>

namespace levelga::harness {

double mean(const std::vector<double>& v);
double median(std::vector<double> v);

/// Two-sided Student-t confidence interval for the mean. A single sample
/// yields the degenerate interval [mean, mean] with the flag set; hitting
/// times are heavy-tailed, so this is an approximation, not a guarantee.
struct MeanCI {
    double mean = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 0;
    bool degenerate = false;
};
MeanCI mean_ci(const std::vector<double>& v, double confidence = 0.95);

/// One-sided upper confidence limit for the mean (Student-t).
double mean_upper_cl(const std::vector<double>& v, double confidence = 0.95);

/// Ordinary least squares y = slope * x + intercept.
struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;  // NaN when fewer than 3 points
    std::size_t n = 0;
};
OlsFit ols(const std::vector<double>& xs, const std::vector<double>& ys);

/// Least-squares constant c for y = c * g (regression through the origin).
double through_origin_constant(const std::vector<double>& g, const std::vector<double>& y);

/// Upper tail probability of the chi-square distribution; wraps the GSL
/// routine so test code does not link GSL directly.
double chi_square_tail(double statistic, double dof);

}  // namespace levelga::harness
