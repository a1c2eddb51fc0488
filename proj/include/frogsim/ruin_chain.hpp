// First-visit generating functions of the absorbing birth-death chain on
// {0,...,N} (SRW inside, both ends absorbing): closed sine forms, the
// dynamic-programming series oracle, and the second-order lower bounds.
#pragma once

#include <stdexcept>

namespace frogsim {

struct RuinChainSpec {
    int path_length;  // N >= 2, states 0..N
    double z;         // generating-function argument, z >= 1
    double phi;       // arccos(1/z), phi in [0, pi/N)

    RuinChainSpec(int path_length, double z);
};

class DivergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Convergence radius of F_N: R_N = 1/cos(pi/N).
double ruin_radius(int path_length);

// Closed form for F_N(x,y|z). Supported pairs: (1,N), (N-1,N) and their
// reflections (N-1,0), (1,0); at z = 1 the analytic gambler's-ruin limit
// branch is used. Throws DivergenceError at or beyond the radius.
double first_visit_gf_closed(const RuinChainSpec& spec, int x, int y);
double first_visit_gf_closed(int path_length, int x, int y, double z);

// Series oracle: sums f^(n)_N(x,y) z^n by stepping the taboo chain until
// the spectral tail bound drops below `tol`. Any interior x, y in {0,N}.
double first_visit_gf_series(int path_length, int x, int y, double z, double tol = 1e-12);

// Lemma-style lower bounds for F_{N+1}(N, N+1 | 1/cos phi) ("near") and
// F_{N+1}(1, N+1 | 1/cos phi) ("far"); phi in [0, pi/(N+1)).
enum class BoundEnd { Near, Far };
double fapprox_lower(int n, double phi, BoundEnd which);

// Expected frozen mass of the absorbing BMC on the stretch: first-visit
// generating function evaluated at z = mu_bar, summed over the target set.
enum class FrozenTarget { AtZero, AtEnd, Both };
double expected_frozen(const RuinChainSpec& spec, int x, FrozenTarget target, double mu_bar);

}  // namespace frogsim
