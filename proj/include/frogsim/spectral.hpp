// Spectral radii of simple random walk on trees: the homogeneous-tree
// closed form, the subdivision law, power iteration on explicit
// substochastic kernels, and monotone ball lower bounds.
#pragma once

#include <cstddef>
#include <vector>

#include "frogsim/tree.hpp"

namespace frogsim {

// rho(T_{d+1}) = 2 sqrt(d) / (d+1), d >= 2.
double rho_homogeneous(int d);

// rho of the tree with every edge subdivided into N: cos(arccos(rho)/N).
double rho_subdivision(double rho, int subdivisions);

// Square nonnegative matrix in row-major order.
struct Kernel {
    std::size_t n = 0;
    std::vector<double> a;  // n*n entries
    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    static Kernel zero(std::size_t n) { return {n, std::vector<double>(n * n, 0.0)}; }
};

struct SpectralEstimate {
    double value = 0.0;
    std::size_t subset_size = 0;
    long iterations = 0;
    double residual = 0.0;
};

// Largest eigenvalue of a nonnegative substochastic matrix by power
// iteration (all-ones start, diagonal shift against bipartite
// oscillation, Rayleigh-quotient residual <= tol).
SpectralEstimate spectral_radius_finite(const Kernel& kernel, double tol = 1e-10,
                                        long max_iterations = 1'000'000);

// Interior of the absorbing ruin chain on {0..N}: tridiagonal 1/2 kernel
// with Perron root cos(pi/N).
Kernel ruin_interior_kernel(int path_length);

// Radial quotient of the SRW on the ball of a d-ary tree (root with d
// children, every other vertex with d children): states are distances
// 0..radius, substochastic at the boundary. The Perron vector of the
// ball operator is radial, so this kernel has the ball's spectral radius.
Kernel homogeneous_ball_radial_kernel(int d, int radius);

// Monotone lower bounds for rho(T) via power iteration on balls around
// the root; vertex_cap guards against exploding ball sizes.
std::vector<SpectralEstimate> rho_tree_lower_bounds(RootedTree& tree,
                                                    const std::vector<int>& radii,
                                                    double tol = 1e-10,
                                                    std::size_t vertex_cap = 4'000'000);

// |delta_E F| / Vol(F) for a finite explored vertex set F.
double isoperimetric_ratio(RootedTree& tree, const std::vector<VertexId>& subset);

}  // namespace frogsim
