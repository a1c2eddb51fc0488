// Offspring-distribution algebra: probability generating function,
// extinction probability, and the backbone/bush transforms used to
// decompose a supercritical Galton--Watson tree into an infinite
// leafless skeleton with finite bushes attached.
#pragma once

#include "frogsim/distribution.hpp"

namespace frogsim {

// f(r) = sum_k p_k r^k, for r in [0,1].
double pgf_eval(const OffspringDistribution& dist, double r);

// f'(r) on [0,1].
double pgf_derivative(const OffspringDistribution& dist, double r);

// Smallest fixpoint q of f(r) = r, to absolute tolerance 1e-12.
// q = 1 when the process is (sub)critical.
double extinction_prob(const OffspringDistribution& dist);

// Coefficients of f*(s) = (f(q + (1-q)s) - q) / (1-q); requires q < 1.
// Entry k is the probability that a backbone vertex has exactly k
// type-g children; entry 0 is exactly zero.
std::vector<double> backbone_coefficients(const OffspringDistribution& dist);

// Coefficients of the bush pgf  f~(s) = f(qs)/q; requires q > 0.
std::vector<double> bush_coefficients(const OffspringDistribution& dist);

// Evaluable transforms (polynomials in s on [0,1]).
class Pgf {
  public:
    explicit Pgf(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}
    double operator()(double s) const;
    double derivative(double s) const;
    const std::vector<double>& coefficients() const { return coeffs_; }

  private:
    std::vector<double> coeffs_;
};

Pgf backbone_pgf(const OffspringDistribution& dist);
Pgf bush_pgf(const OffspringDistribution& dist);

// E[|T_sub|] = 1/(1 - f'(q)): mean total progeny of one bush, root included.
double expected_bush_size(const OffspringDistribution& dist);

}  // namespace frogsim
