// Finite-support probability vectors over counts 0..d_max, used both for
// Galton--Watson offspring laws and for sleeping-frog initial conditions.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frogsim {

class DiscreteDistribution {
  public:
    // Validates: entries in [0,1], sum within 1e-12 of 1, trailing zeros trimmed.
    explicit DiscreteDistribution(std::vector<double> probs);

    static DiscreteDistribution delta(int k);  // point mass at k
    static DiscreteDistribution bernoulli_count(double p);  // 1 w.p. p, else 0

    // "0.25,0,0.75" (index order) or "p0=0.25 p2=0.75" / "0:0.25,2:0.75".
    static DiscreteDistribution parse(const std::string& text);
    // JSON object {"probs":[...]} or plain-text key=value lines.
    static DiscreteDistribution load(const std::string& path);

    double prob(int k) const;
    const std::vector<double>& probs() const { return probs_; }
    int d_max() const { return static_cast<int>(probs_.size()) - 1; }
    double mean() const { return mean_; }

    // min{i >= 2 : p_i > 0}; empty when all mass sits on {0,1}.
    std::optional<int> d_min() const;

    // Inverse-CDF sample from a uniform in [0,1).
    int sample(double u) const;

    // Law of X+1 (BMC offspring derived from a frog configuration).
    DiscreteDistribution shifted_by_one() const;

    std::string to_string() const;  // canonical "p0,p1,...,pk" echo

    bool operator==(const DiscreteDistribution& other) const = default;

  private:
    std::vector<double> probs_;
    double mean_ = 0.0;
};

using OffspringDistribution = DiscreteDistribution;
using FrogInit = DiscreteDistribution;

}  // namespace frogsim
