#include "frogsim/ruin_chain.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace frogsim {

namespace {
constexpr double kPhiZeroBranch = 1e-8;   // below this, use the z=1 limits
constexpr double kPoleGuard = 1e-6;       // within this of pi/N, defer to the series
}  // namespace

double ruin_radius(int path_length) {
    if (path_length < 2) throw std::invalid_argument("ruin chain needs N >= 2");
    return 1.0 / std::cos(std::numbers::pi / path_length);
}

RuinChainSpec::RuinChainSpec(int n, double z_arg) : path_length(n), z(z_arg) {
    if (n < 2) throw std::invalid_argument("ruin chain needs N >= 2");
    if (z < 1.0) throw std::invalid_argument("ruin chain: z must be >= 1");
    if (z >= ruin_radius(n))
        throw DivergenceError("ruin chain: z = " + std::to_string(z) +
                              " at or beyond the convergence radius for N = " + std::to_string(n));
    phi = std::acos(1.0 / z);
}

namespace {

// Map a supported (x,y) onto the canonical target-at-N form using the
// reflection F_N(x,0) = F_N(N-x,N).
int canonical_start(int n, int x, int y) {
    int xs = x;
    if (y == 0)
        xs = n - x;
    else if (y != n)
        throw std::invalid_argument("first_visit_gf_closed: target must be 0 or N");
    if (xs != 1 && xs != n - 1)
        throw std::invalid_argument(
            "first_visit_gf_closed: only (1,N), (N-1,N) and their reflections have closed forms");
    return xs;
}

}  // namespace

double first_visit_gf_closed(const RuinChainSpec& spec, int x, int y) {
    const int n = spec.path_length;
    const int xs = canonical_start(n, x, y);
    const double phi = spec.phi;

    if (phi < kPhiZeroBranch) return static_cast<double>(xs) / n;  // gambler's ruin limit
    if (phi > std::numbers::pi / n - kPoleGuard)
        return first_visit_gf_series(n, x, y, spec.z, 1e-12);

    const double denom = std::sin(n * phi);
    if (xs == 1) return std::sin(phi) / denom;
    return std::sin((n - 1) * phi) / denom;
}

double first_visit_gf_closed(int path_length, int x, int y, double z) {
    return first_visit_gf_closed(RuinChainSpec(path_length, z), x, y);
}

double first_visit_gf_series(int path_length, int x, int y, double z, double tol) {
    const int n = path_length;
    if (n < 2) throw std::invalid_argument("first_visit_gf_series: N >= 2");
    if (y != 0 && y != n)
        throw std::invalid_argument("first_visit_gf_series: target must be an absorbing end");
    if (x <= 0 || x >= n) {
        if (x == y) return 1.0;
        return 0.0;  // starting absorbed at the other end
    }
    const double lambda = std::cos(std::numbers::pi / n);  // interior spectral radius
    if (z * lambda >= 1.0)
        throw DivergenceError("first_visit_gf_series: z at or beyond the convergence radius");

    // mass[i], i = 1..n-1: probability of being at interior state i without
    // having been absorbed. f^(m)(x,y) is half of the neighbour mass one
    // step earlier.
    std::vector<double> mass(n + 1, 0.0), next(n + 1, 0.0);
    mass[x] = 1.0;
    const int exit_neighbor = (y == 0) ? 1 : n - 1;

    double total = 0.0;
    double zpow = 1.0;
    double lampow = 1.0;  // lambda^{m-1}
    // sqrt(n) covers the 2-norm -> 1-norm slack in the tail bound
    const double slack = std::sqrt(static_cast<double>(n));
    for (long m = 1; m < 100000000L; ++m) {
        zpow *= z;
        const double hit = 0.5 * mass[exit_neighbor];
        total += hit * zpow;

        // tail bound: sum_{j>m} z^j f^(j) <= slack/2 * z^{m+1} lambda^m / (1 - z lambda)
        const double tail = 0.5 * slack * zpow * z * lambda * lampow / (1.0 - z * lambda);
        if (tail < tol && m > 1) break;
        lampow *= lambda;

        double interior = 0.0;
        for (int i = 1; i < n; ++i) {
            const double left = (i >= 2) ? mass[i - 1] : 0.0;
            const double right = (i <= n - 2) ? mass[i + 1] : 0.0;
            next[i] = 0.5 * (left + right);
            interior += next[i];
        }
        std::swap(mass, next);
        if (interior == 0.0) break;
    }
    return total;
}

double fapprox_lower(int n, double phi, BoundEnd which) {
    if (n < 1) throw std::invalid_argument("fapprox_lower: N >= 1");
    if (phi < 0.0 || phi >= std::numbers::pi / (n + 1))
        throw std::invalid_argument("fapprox_lower: phi outside [0, pi/(N+1))");
    const double nn = static_cast<double>(n);
    if (which == BoundEnd::Near)
        return nn / (nn + 1.0) * (1.0 + (1.0 + 2.0 * nn) * phi * phi / 6.0);
    return 1.0 / (nn + 1.0) * (1.0 + (2.0 * nn + nn * nn) * phi * phi / 6.0);
}

namespace {

double gf_any(int n, int x, int y, double z) {
    // closed form where supported, series otherwise
    const int xs = (y == 0) ? n - x : x;
    if (xs == 1 || xs == n - 1) return first_visit_gf_closed(n, x, y, z);
    return first_visit_gf_series(n, x, y, z, 1e-12);
}

}  // namespace

double expected_frozen(const RuinChainSpec& spec, int x, FrozenTarget target, double mu_bar) {
    const int n = spec.path_length;
    if (mu_bar >= ruin_radius(n))
        throw DivergenceError("expected_frozen: mu_bar at or beyond the convergence radius");
    if (x < 1 || x > n - 1) throw std::invalid_argument("expected_frozen: interior start required");
    double total = 0.0;
    if (target == FrozenTarget::AtZero || target == FrozenTarget::Both)
        total += gf_any(n, x, 0, mu_bar);
    if (target == FrozenTarget::AtEnd || target == FrozenTarget::Both)
        total += gf_any(n, x, n, mu_bar);
    return total;
}

}  // namespace frogsim
