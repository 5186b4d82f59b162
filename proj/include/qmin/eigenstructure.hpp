// eigenstructure.hpp — executable forms of the Theta(j,k) least-eigenvector
// structure lemmas and the rewiring constructions that strictly decrease q.
#pragma once
#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "qmin/graph.hpp"
#include "qmin/topology.hpp"

namespace qmin {

enum class ThetaCase { symmetric, asymmetric };

struct AssertionRecord {
    std::string name;
    bool pass = false;
    double margin = 0.0;  // distance by which the assertion holds (or fails)
};

/// Structural classification of the least eigenspace of Theta(j,k).
///
/// symmetric: the eigenspace contains a vector vanishing at v_0 that is
/// antisymmetric under the hub-swapping reflection (with the midpoint zeros
/// the parity forces). Witness returned.
///
/// asymmetric: no such vector; the least eigenvector itself is then
/// reflection-symmetric, nowhere zero, sign-alternating on every edge except
/// the middle edge of the odd hub-to-hub path, grows in magnitude along the
/// even paths toward their midpoints and decays along the odd path toward
/// its middle edge.
struct EigvecProfile {
    ThetaShape shape;
    ThetaCase kind;
    int eigenspace_dim = 1;
    double q = 0.0;
    Eigen::VectorXd witness;
    std::vector<AssertionRecord> assertions;

    bool all_pass() const;
};

EigvecProfile classify_theta_eigenvector(const ThetaShape& shape);

/// F = -(X composed with the reflection automorphism); an eigenvector for the
/// same eigenvalue whenever X is one.
Eigen::VectorXd reflect_negate(const ThetaShape& shape, const Eigen::VectorXd& x);

/// Y = X + F. Null when X is reflection-symmetric (Y = 0); otherwise Y is a
/// least eigenvector with y(v_0) = 0 (residual-checked). X must be a least
/// eigenvector of theta_graph(shape).
std::optional<Eigen::VectorXd> symmetrize_eigenvector(const ThetaShape& shape,
                                                      const Eigen::VectorXd& x);

/// Outcome of one structural rewiring. The transferred vector certifies
/// rayleigh(target, y) <= q(source); the eigensolver certifies the strict
/// drop q(target) < q(source).
struct RewireResult {
    Graph source;
    Graph target;
    Eigen::VectorXd test_vector;
    double rayleigh_before = 0.0;  // = q(source)
    double rayleigh_after = 0.0;   // f_target(test_vector)
    double q_before = 0.0;
    double q_after = 0.0;
    double margin = 0.0;  // q_before - q_after, must exceed 1e-9
};

/// Odd order: absorb the vertices outside the odd cycle c (which contains the
/// max-|x| vertex) into a Hamiltonian cycle isomorphic to C_n, with the
/// alternating test vector. Requires |V(c)| < n.
RewireResult rewire_cycle_absorb(const Graph& g, const VertexPath& c, const Eigen::VectorXd& x);

/// Even order: thread all but one outside vertex into an odd (n-1)-cycle and
/// attach the last at cycle-distance 2 from v_mu, producing a graph
/// isomorphic to Theta. Requires n - L(c) >= 3; L(c) = n-1 is rejected and
/// belongs to the direct theta-dominance route.
RewireResult rewire_theta_absorb(const Graph& g, const VertexPath& c, const Eigen::VectorXd& x);

struct DominanceResult {
    double q_star = 0.0;   // q(Theta) at the same order
    double q_shape = 0.0;  // q(Theta(j,k))
    double margin = 0.0;   // q_shape - q_star
    bool isomorphic_to_star = false;
    bool pass = false;
};

/// q(Theta) <= q(Theta(j,k)), equality exactly under isomorphism to Theta.
DominanceResult verify_theta_dominance(const ThetaShape& shape);

}  // namespace qmin
