#pragma once

#include <Eigen/Dense>

#include "cospec/rooted_graph.hpp"
#include "cospec/walk_kernel.hpp"

namespace cospec {

struct SpectralRadiusResult {
    double value = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

// Spectral radius of the kernel's Markov operator restricted to the ball with
// zero (Dirichlet) boundary. Power iteration on the squared operator keeps
// near-bipartite spectra from stalling; every iterate is a certified lower
// bound on the true spectral radius, increasing in the truncation radius.
SpectralRadiusResult markov_spectral_radius(const RootedGraph& g, const WalkKernel& k,
                                            int max_iterations = 100000, double tol = 1e-8);

// Top eigenvalue of the adjacency operator (same squared-operator scheme).
SpectralRadiusResult adjacency_operator_norm(const RootedGraph& g, int max_iterations = 100000,
                                             double tol = 1e-10);

// Dense helpers (Eigen is the only math dependency).

// Largest eigenvalue of a symmetric matrix expression.
template <typename Derived>
double top_eigenvalue_sym(const Eigen::MatrixBase<Derived>& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.derived());
    return es.eigenvalues().maxCoeff();
}

// Largest-magnitude eigenvalue of a general square matrix expression.
template <typename Derived>
double spectral_radius_dense(const Eigen::MatrixBase<Derived>& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(m.derived(), /*computeEigenvectors=*/false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace cospec
