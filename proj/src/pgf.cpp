#include "frogsim/pgf.hpp"

#include <cmath>
#include <stdexcept>

namespace frogsim {

namespace {
constexpr double kFixpointTol = 1e-12;

double poly_eval(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

double poly_derivative_eval(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c[k];
    return acc;
}

}  // namespace

double pgf_eval(const OffspringDistribution& dist, double r) {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("pgf_eval: r outside [0,1]");
    return poly_eval(dist.probs(), r);
}

double pgf_derivative(const OffspringDistribution& dist, double r) {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("pgf_derivative: r outside [0,1]");
    return poly_derivative_eval(dist.probs(), r);
}

double extinction_prob(const OffspringDistribution& dist) {
    if (dist.prob(0) == 0.0) return 0.0;
    if (dist.mean() <= 1.0) return 1.0;

    // f is convex with f(0) = p_0 > 0 and f'(1) = m > 1, so f(r) - r has
    // exactly one root in (0,1); it is positive at 0 and negative just
    // below 1. Bisection, then the answer is already far below machine
    // noise at tolerance 1e-12.
    double lo = 0.0;
    double hi = 1.0 - 1e-9;
    if (pgf_eval(dist, hi) - hi >= 0.0) {
        // mean barely above 1: widen toward 1 until the sign flips.
        while (hi < 1.0 - 1e-15 && pgf_eval(dist, hi) - hi >= 0.0) hi = 0.5 * (hi + 1.0);
        if (pgf_eval(dist, hi) - hi >= 0.0) return 1.0;
    }
    while (hi - lo > kFixpointTol * 0.5) {
        const double mid = 0.5 * (lo + hi);
        if (pgf_eval(dist, mid) - mid > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> backbone_coefficients(const OffspringDistribution& dist) {
    const double q = extinction_prob(dist);
    if (q >= 1.0) throw std::invalid_argument("backbone_pgf: no infinite backbone (q = 1)");
    const auto& p = dist.probs();
    const int dmax = dist.d_max();

    // f(q + (1-q)s) = sum_j p_j sum_k C(j,k) q^{j-k} (1-q)^k s^k, and the
    // constant term cancels against q; divide the rest by (1-q).
    std::vector<double> out(p.size(), 0.0);
    for (int k = 1; k <= dmax; ++k) {
        double binom = 1.0;  // C(k,k)
        double acc = 0.0;
        double qpow = 1.0;
        for (int j = k; j <= dmax; ++j) {
            acc += p[j] * binom * qpow;
            binom = binom * static_cast<double>(j + 1) / static_cast<double>(j + 1 - k);
            qpow *= q;
        }
        out[k] = std::pow(1.0 - q, k - 1) * acc;
    }
    out[0] = 0.0;
    return out;
}

std::vector<double> bush_coefficients(const OffspringDistribution& dist) {
    const double q = extinction_prob(dist);
    if (q <= 0.0) throw std::invalid_argument("bush_pgf: no bushes exist (q = 0)");
    const auto& p = dist.probs();
    std::vector<double> out(p.size(), 0.0);
    double qpow = 1.0 / q;  // q^{k-1} built incrementally
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k] = p[k] * qpow;
        qpow *= q;
    }
    return out;
}

double Pgf::operator()(double s) const {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("pgf: s outside [0,1]");
    return poly_eval(coeffs_, s);
}

double Pgf::derivative(double s) const {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("pgf: s outside [0,1]");
    return poly_derivative_eval(coeffs_, s);
}

Pgf backbone_pgf(const OffspringDistribution& dist) { return Pgf(backbone_coefficients(dist)); }

Pgf bush_pgf(const OffspringDistribution& dist) { return Pgf(bush_coefficients(dist)); }

double expected_bush_size(const OffspringDistribution& dist) {
    const double q = extinction_prob(dist);
    if (q <= 0.0) throw std::invalid_argument("expected_bush_size: no bushes exist (q = 0)");
    const double bush_mean = pgf_derivative(dist, q);  // f~'(1) = f'(q)
    if (bush_mean >= 1.0)
        throw std::invalid_argument("expected_bush_size: bush process not subcritical");
    return 1.0 / (1.0 - bush_mean);
}

}  // namespace frogsim
