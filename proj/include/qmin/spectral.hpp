// spectral.hpp — signless Laplacian Q = D + A, Rayleigh quotients, and
// certified least/largest eigenpairs for graphs of order <= 64.
#pragma once
#include <Eigen/Dense>
#include <vector>

#include "qmin/graph.hpp"

namespace qmin {

/// Q(G) = D(G) + A(G); symmetric, entries are nonnegative integers,
/// positive semi-definite.
Eigen::MatrixXd q_matrix(const Graph& g);

/// Eigenvalue with unit eigenvector and the computed residual
/// max_i |(QX - lambda X)_i|. The residual must clear the certification
/// bound 1e-10 * (1 + max row sum of Q) or construction throws.
struct EigenPair {
    double value = 0.0;
    Eigen::VectorXd vector;
    double residual = 0.0;
};

/// f_G(X) = sum_{uv in E} (x_u + x_v)^2 / sum_v x_v^2, evaluated by the edge
/// sum, cross-checked against X^T Q X / X^T X to 1e-12 relative.
double rayleigh(const Graph& g, const Eigen::VectorXd& x);

/// Least Q-eigenvalue q(G) with eigenvector. Requires connected input,
/// so that q = 0 iff bipartite holds.
EigenPair least_q(const Graph& g);

/// Largest Q-eigenvalue rho(G) with eigenvector. Requires connected input.
EigenPair spectral_radius(const Graph& g);

/// All eigenvalues ascending. Requires connected input.
std::vector<double> full_spectrum(const Graph& g);

/// Least eigenvalue with an orthonormal basis of its eigenspace; eigenvalues
/// within tol of the minimum are treated as one eigenspace.
struct Eigenspace {
    double value = 0.0;
    Eigen::MatrixXd basis;  // n x dim
};
Eigenspace least_eigenspace(const Graph& g, double tol = 1e-7);

/// Least eigenvalue of Q(G) with no connectivity gate: the spectrum of a
/// disconnected graph is the union over components, so this is the global
/// per-component minimum.
double least_q_value_any(const Graph& g);

struct BoundCheck {
    bool ok = false;
    double margin = 0.0;
};

/// q(G) < delta(G) (minimum degree); margin = delta - q. Connected, n >= 2.
BoundCheck check_min_degree_bound(const Graph& g);

/// q(G - e) <= q(G); delta = q(G) - q(G-e). If G - e disconnects, the
/// right-hand side is the per-component minimum. Connected G, e in E(G).
BoundCheck check_edge_deletion_monotone(const Graph& g, Edge e);

}  // namespace qmin
