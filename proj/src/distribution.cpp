#include "frogsim/distribution.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace frogsim {

namespace {
constexpr double kSumTolerance = 1e-12;
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    while (probs_.size() > 1 && probs_.back() == 0.0) probs_.pop_back();
    if (probs_.empty()) throw std::invalid_argument("distribution: empty probability vector");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("distribution: entry outside [0,1]");
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kSumTolerance)
        throw std::invalid_argument("distribution: probabilities sum to " + std::to_string(sum));
    for (std::size_t k = 0; k < probs_.size(); ++k) mean_ += static_cast<double>(k) * probs_[k];
}

DiscreteDistribution DiscreteDistribution::delta(int k) {
    if (k < 0) throw std::invalid_argument("delta: negative count");
    std::vector<double> p(static_cast<std::size_t>(k) + 1, 0.0);
    p.back() = 1.0;
    return DiscreteDistribution(std::move(p));
}

DiscreteDistribution DiscreteDistribution::bernoulli_count(double p) {
    return DiscreteDistribution({1.0 - p, p});
}

namespace {

DiscreteDistribution parse_pairs(const std::string& text) {
    std::vector<double> probs;
    std::string token;
    auto put = [&probs](int idx, double value) {
        if (idx < 0) throw std::invalid_argument("distribution: negative index");
        if (static_cast<std::size_t>(idx) >= probs.size()) probs.resize(idx + 1, 0.0);
        probs[idx] = value;
    };
    // split on comma, whitespace or newline
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',' || c == '\n' || c == '\t') c = ' ';
    std::istringstream items(cleaned);
    while (items >> token) {
        auto sep = token.find_first_of(":=");
        if (sep == std::string::npos)
            throw std::invalid_argument("distribution: expected key=value, got '" + token + "'");
        std::string key = token.substr(0, sep);
        if (!key.empty() && (key[0] == 'p' || key[0] == 'P')) key.erase(0, 1);
        put(std::stoi(key), std::stod(token.substr(sep + 1)));
    }
    return DiscreteDistribution(std::move(probs));
}

}  // namespace

DiscreteDistribution DiscreteDistribution::parse(const std::string& text) {
    if (text.find_first_of(":=") != std::string::npos) return parse_pairs(text);
    std::vector<double> probs;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    double v = 0.0;
    while (in >> v) probs.push_back(v);
    if (probs.empty()) throw std::invalid_argument("distribution: nothing to parse");
    return DiscreteDistribution(std::move(probs));
}

DiscreteDistribution DiscreteDistribution::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("distribution: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto j = nlohmann::json::parse(text);
        if (!j.contains("probs") || !j["probs"].is_array())
            throw std::invalid_argument("distribution: JSON needs a \"probs\" array");
        return DiscreteDistribution(j["probs"].get<std::vector<double>>());
    }
    return parse(text);
}

double DiscreteDistribution::prob(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= probs_.size()) return 0.0;
    return probs_[k];
}

std::optional<int> DiscreteDistribution::d_min() const {
    for (std::size_t k = 2; k < probs_.size(); ++k)
        if (probs_[k] > 0.0) return static_cast<int>(k);
    return std::nullopt;
}

int DiscreteDistribution::sample(double u) const {
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < probs_.size(); ++k) {
        acc += probs_[k];
        if (u < acc) return static_cast<int>(k);
    }
    return d_max();
}

DiscreteDistribution DiscreteDistribution::shifted_by_one() const {
    std::vector<double> p(probs_.size() + 1, 0.0);
    for (std::size_t k = 0; k < probs_.size(); ++k) p[k + 1] = probs_[k];
    return DiscreteDistribution(std::move(p));
}

std::string DiscreteDistribution::to_string() const {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t k = 0; k < probs_.size(); ++k) {
        if (k) out << ',';
        out << probs_[k];
    }
    return out.str();
}

}  // namespace frogsim
