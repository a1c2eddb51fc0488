// Counter-based random number generation (Philox2x64-10).
//
// Every random quantity in the toolkit is a pure function of
// (64-bit key, 64-bit counter). Keys are derived by hashing a seed
// together with a stream purpose and an entity id (vertex key, frog id,
// ...), so lazily exploring a tree or replaying a simulation in any
// order always reproduces the same draws.
#pragma once

#include <cmath>
#include <cstdint>

namespace frogsim::rng {

namespace detail {

struct U128 {
    std::uint64_t hi;
    std::uint64_t lo;
};

inline U128 mul_wide(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return {static_cast<std::uint64_t>(p >> 64), static_cast<std::uint64_t>(p)};
}

}  // namespace detail

inline constexpr std::uint64_t kPhiloxMultiplier = 0xD2B74407B1CE6E93ULL;
inline constexpr std::uint64_t kPhiloxBumpKey = 0x9E3779B97F4A7C15ULL;

// One Philox2x64-10 block; returns the first output word.
inline std::uint64_t philox(std::uint64_t ctr_hi, std::uint64_t ctr_lo, std::uint64_t key) {
    std::uint64_t l = ctr_hi;
    std::uint64_t r = ctr_lo;
    std::uint64_t k = key;
    for (int round = 0; round < 10; ++round) {
        const auto p = detail::mul_wide(kPhiloxMultiplier, l);
        l = p.hi ^ k ^ r;
        r = p.lo;
        k += kPhiloxBumpKey;
    }
    return l ^ r;
}

// Key derivation for named streams; chaining philox keeps derived keys
// statistically independent of each other and of the draw streams.
inline std::uint64_t derive_key(std::uint64_t a, std::uint64_t b) {
    return philox(a, 0x7fb5d329728ea185ULL, b);
}

inline std::uint64_t derive_key(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return derive_key(derive_key(a, b), c);
}

// Uniform double in [0,1) from 53 high bits.
inline double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform(std::uint64_t key, std::uint64_t ctr) {
    return to_unit(philox(ctr, 0, key));
}

// Stateful convenience wrapper over a (key, counter) stream.
class Stream {
  public:
    explicit Stream(std::uint64_t key, std::uint64_t ctr = 0) : key_(key), ctr_(ctr) {}

    std::uint64_t next_u64() { return philox(ctr_++, 0, key_); }
    double next_unit() { return to_unit(next_u64()); }

    // Uniform index in [0, n); n must be >= 1.
    std::uint32_t next_below(std::uint32_t n) {
        double u = next_unit();
        auto i = static_cast<std::uint32_t>(u * n);
        return i < n ? i : n - 1;
    }

    bool next_bernoulli(double p) { return next_unit() < p; }

    // Number of trailing failures before success, P(k) = p^k (1-p); p in [0,1).
    std::uint64_t next_geometric_failures(double p) {
        if (p <= 0.0) return 0;
        double u = next_unit();
        while (u <= 0.0) u = next_unit();  // avoid log(0)
        return static_cast<std::uint64_t>(std::log(u) / std::log(p));
    }

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return ctr_; }

  private:
    std::uint64_t key_;
    std::uint64_t ctr_;
};

// Stream purposes. Simulators share the Walk and Eta spaces so that
// coupled runs see identical randomness (see sim_frog.cpp).
enum class Purpose : std::uint64_t {
    Offspring = 1,   // per-vertex child-count draw (tree sampling)
    Eta = 2,         // per-vertex sleeping-frog count
    Walk = 3,        // per-entity SRW steps (frogs and coupled particles)
    UncoupledWalk = 4,
    Branch = 5,      // per-entity BMC offspring draws
    TieBreak = 6,    // first-arrival tie-breaking, keyed by vertex
    StretchMark = 7, // decomposed sampler: bs marks
    StretchLen = 8,  // decomposed sampler: stretch lengths
    Generic = 9,
};

inline std::uint64_t stream_key(std::uint64_t seed, Purpose purpose, std::uint64_t entity) {
    return derive_key(seed, static_cast<std::uint64_t>(purpose), entity);
}

inline const char* generator_name() { return "philox2x64-10"; }

}  // namespace frogsim::rng
