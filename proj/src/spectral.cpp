#include "qmin/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "qmin/errors.hpp"
#include "qmin/topology.hpp"

namespace qmin {

namespace {

constexpr double kResidualScale = 1e-10;
constexpr double kMonotoneTol = 1e-9;

double max_row_sum(const Eigen::MatrixXd& q) {
    return q.cwiseAbs().rowwise().sum().maxCoeff();
}

// unit norm, first entry of magnitude > 1e-12 made positive
void normalize_sign(Eigen::VectorXd& x) {
    x.normalize();
    for (int i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) > 1e-12) {
            if (x[i] < 0) x = -x;
            return;
        }
    }
}

EigenPair certified_pair(const Eigen::MatrixXd& q, double value, Eigen::VectorXd vec) {
    normalize_sign(vec);
    EigenPair p{value, vec, (q * vec - value * vec).cwiseAbs().maxCoeff()};
    const double bound = kResidualScale * (1.0 + max_row_sum(q));
    if (p.residual > bound) {
        throw std::runtime_error("eigenpair residual " + std::to_string(p.residual) +
                                 " exceeds certification bound");
    }
    return p;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const Eigen::MatrixXd& q) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver failed to converge");
    }
    return es;
}

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) {
        throw ContractViolation(std::string(who) + " requires a connected graph");
    }
}

}  // namespace

Eigen::MatrixXd q_matrix(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        q(u, v) = 1.0;
        q(v, u) = 1.0;
        q(u, u) += 1.0;
        q(v, v) += 1.0;
    }
    return q;
}

double rayleigh(const Graph& g, const Eigen::VectorXd& x) {
    if (x.size() != g.order()) {
        throw std::invalid_argument("rayleigh: vector length does not match order");
    }
    const double denom = x.squaredNorm();
    if (denom == 0.0) throw std::invalid_argument("rayleigh: zero vector");
    double num = 0.0;
    for (auto [u, v] : g.edges()) {
        const double s = x[u] + x[v];
        num += s * s;
    }
    const double edge_form = num / denom;
    // the edge sum is the reference; the matrix product must agree
    const Eigen::MatrixXd q = q_matrix(g);
    const double matrix_form = x.dot(q * x) / denom;
    const double scale = std::max(1.0, std::abs(edge_form));
    if (std::abs(edge_form - matrix_form) > 1e-12 * scale) {
        throw std::runtime_error("rayleigh: edge-sum and matrix forms disagree");
    }
    return edge_form;
}

EigenPair least_q(const Graph& g) {
    require_connected(g, "least_q");
    const Eigen::MatrixXd q = q_matrix(g);
    auto es = solve(q);
    return certified_pair(q, es.eigenvalues()[0], es.eigenvectors().col(0));
}

EigenPair spectral_radius(const Graph& g) {
    require_connected(g, "spectral_radius");
    const Eigen::MatrixXd q = q_matrix(g);
    auto es = solve(q);
    const int last = g.order() - 1;
    return certified_pair(q, es.eigenvalues()[last], es.eigenvectors().col(last));
}

std::vector<double> full_spectrum(const Graph& g) {
    require_connected(g, "full_spectrum");
    const Eigen::MatrixXd q = q_matrix(g);
    auto es = solve(q);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + g.order());
    for (double v : out) {
        if (v < -1e-10) throw std::runtime_error("negative Q-eigenvalue " + std::to_string(v));
    }
    return out;
}

Eigenspace least_eigenspace(const Graph& g, double tol) {
    require_connected(g, "least_eigenspace");
    const Eigen::MatrixXd q = q_matrix(g);
    auto es = solve(q);
    const double q0 = es.eigenvalues()[0];
    int dim = 1;
    while (dim < g.order() && es.eigenvalues()[dim] <= q0 + tol) ++dim;
    return Eigenspace{q0, es.eigenvectors().leftCols(dim)};
}

double least_q_value_any(const Graph& g) {
    const Eigen::MatrixXd q = q_matrix(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver failed to converge");
    }
    return es.eigenvalues()[0];
}

BoundCheck check_min_degree_bound(const Graph& g) {
    if (g.order() < 2) {
        throw std::invalid_argument("check_min_degree_bound requires n >= 2");
    }
    require_connected(g, "check_min_degree_bound");
    const double margin = g.min_degree() - least_q(g).value;
    return BoundCheck{margin > 0.0, margin};
}

BoundCheck check_edge_deletion_monotone(const Graph& g, Edge e) {
    require_connected(g, "check_edge_deletion_monotone");
    if (!g.has_edge(e.first, e.second)) {
        throw std::invalid_argument("check_edge_deletion_monotone: edge not in G");
    }
    const double before = least_q(g).value;
    const double after = least_q_value_any(remove_edge(g, e.first, e.second));
    const double delta = before - after;
    return BoundCheck{after <= before + kMonotoneTol, delta};
}

}  // namespace qmin
