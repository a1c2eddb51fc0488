#include "frogsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace frogsim::stats {

double mean(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("mean of empty sample");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double variance(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

double std_error_of_mean(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("std error of empty sample");
    return std::sqrt(variance(xs) / static_cast<double>(xs.size()));
}

double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) throw std::invalid_argument("quantile of empty sample");
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile level outside [0,1]");
    std::sort(xs.begin(), xs.end());
    const double pos = q * static_cast<double>(xs.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= xs.size()) return xs.back();
    const double frac = pos - static_cast<double>(lo);
    return xs[lo] * (1.0 - frac) + xs[lo + 1] * frac;
}

namespace {

// Series expansion of P(a,x), valid for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 0; n < 10000; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x), valid for x >= a+1 (modified Lentz).
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_p domain");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q domain");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_sf(double statistic, double dof) {
    if (dof <= 0.0) throw std::invalid_argument("chi_square_sf needs dof > 0");
    if (statistic <= 0.0) return 1.0;
    return gamma_q(dof / 2.0, statistic / 2.0);
}

namespace {

// Merge cells left-to-right until each bucket's pooled count reaches
// min_expected; the remainder is folded into the last bucket.
void merge_small_cells(const std::vector<double>& a, const std::vector<double>& b,
                       double min_pooled, std::vector<double>& ma, std::vector<double>& mb) {
    double acc_a = 0.0, acc_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc_a += a[i];
        acc_b += b[i];
        if (acc_a + acc_b >= min_pooled) {
            ma.push_back(acc_a);
            mb.push_back(acc_b);
            acc_a = acc_b = 0.0;
        }
    }
    if (acc_a + acc_b > 0.0) {
        if (ma.empty()) {
            ma.push_back(acc_a);
            mb.push_back(acc_b);
        } else {
            ma.back() += acc_a;
            mb.back() += acc_b;
        }
    }
}

}  // namespace

ChiSquareResult chi_square_two_sample(const std::vector<double>& counts_a,
                                      const std::vector<double>& counts_b,
                                      double min_expected) {
    if (counts_a.size() != counts_b.size() || counts_a.empty())
        throw std::invalid_argument("chi_square_two_sample: mismatched cell layouts");

    std::vector<double> a, b;
    merge_small_cells(counts_a, counts_b, 2.0 * min_expected, a, b);
    if (a.size() < 2) return {0.0, 1.0, 1.0};

    double na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += a[i];
        nb += b[i];
    }
    if (na <= 0.0 || nb <= 0.0) throw std::invalid_argument("chi_square_two_sample: empty sample");

    // Standard homogeneity statistic with pooled expectations.
    double stat = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double pooled = (a[i] + b[i]) / (na + nb);
        const double ea = na * pooled;
        const double eb = nb * pooled;
        if (ea > 0.0) stat += (a[i] - ea) * (a[i] - ea) / ea;
        if (eb > 0.0) stat += (b[i] - eb) * (b[i] - eb) / eb;
    }
    const double dof = static_cast<double>(a.size() - 1);
    return {stat, dof, chi_square_sf(stat, dof)};
}

ChiSquareResult chi_square_goodness(const std::vector<double>& observed,
                                    const std::vector<double>& probs,
                                    double min_expected) {
    if (observed.size() != probs.size() || observed.empty())
        throw std::invalid_argument("chi_square_goodness: mismatched layouts");
    double n = 0.0;
    for (double o : observed) n += o;

    std::vector<double> exp_counts(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) exp_counts[i] = n * probs[i];

    std::vector<double> mo, me;
    merge_small_cells(observed, exp_counts, 2.0 * min_expected, mo, me);
    if (mo.size() < 2) return {0.0, 1.0, 1.0};

    double stat = 0.0;
    for (std::size_t i = 0; i < mo.size(); ++i) {
        if (me[i] <= 0.0) {
            if (mo[i] > 0.0) return {std::numeric_limits<double>::infinity(),
                                     static_cast<double>(mo.size() - 1), 0.0};
            continue;
        }
        stat += (mo[i] - me[i]) * (mo[i] - me[i]) / me[i];
    }
    const double dof = static_cast<double>(mo.size() - 1);
    return {stat, dof, chi_square_sf(stat, dof)};
}

}  // namespace frogsim::stats
