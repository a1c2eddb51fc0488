// Small statistics helpers shared by tests, simulators and the CLI:
// moments, quantiles, chi-square p-values (via the regularized
// incomplete gamma function).
#pragma once

#include <cstddef>
#include <vector>

namespace frogsim::stats {

double mean(const std::vector<double>& xs);
double variance(const std::vector<double>& xs);      // unbiased (n-1)
double std_error_of_mean(const std::vector<double>& xs);

// Empirical quantile by linear interpolation, q in [0,1].
double quantile(std::vector<double> xs, double q);

// Regularized incomplete gamma functions P(a,x), Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_sf(double statistic, double dof);

// Two-sample chi-square homogeneity test. Takes raw per-cell counts from
// the two samples (same cell layout); cells where both counts are zero are
// dropped. Returns the p-value; cells with tiny pooled expectation are
// merged into their neighbour to keep the asymptotics honest.
struct ChiSquareResult {
    double statistic;
    double dof;
    double p_value;
};
ChiSquareResult chi_square_two_sample(const std::vector<double>& counts_a,
                                      const std::vector<double>& counts_b,
                                      double min_expected = 5.0);

// One-sample version: observed counts vs model probabilities.
ChiSquareResult chi_square_goodness(const std::vector<double>& observed,
                                    const std::vector<double>& probs,
                                    double min_expected = 5.0);

}  // namespace frogsim::stats
