#include "qmin/eigenstructure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmin/errors.hpp"
#include "qmin/spectral.hpp"

namespace qmin {

namespace {

constexpr double kEigenspaceTol = 1e-7;  // eigenvalues this close to q share the eigenspace
constexpr double kKernelTol = 1e-8;      // least-squares residual for a symmetric witness
constexpr double kEqualTol = 1e-7;       // equality assertions on eigenvector entries
constexpr double kStrictTol = 1e-9;      // strict inequalities must clear this margin

// P1 if its edge count is even, else P2. The even path carries the
// reflection's fixed midpoint vertex; the odd path carries the middle edge.
std::vector<int> even_path(const ThetaShape& s) {
    return (s.k() - s.j()) % 2 == 0 ? s.p1_vertices() : s.p2_vertices();
}
std::vector<int> odd_path(const ThetaShape& s) {
    return (s.k() - s.j()) % 2 == 1 ? s.p1_vertices() : s.p2_vertices();
}

void check_is_least_eigenvector(const Graph& g, const Eigen::VectorXd& x, double q) {
    if (x.size() != g.order()) {
        throw std::invalid_argument("eigenvector length does not match graph order");
    }
    if (x.norm() == 0.0) throw std::invalid_argument("zero vector is not an eigenvector");
    const Eigen::MatrixXd qm = q_matrix(g);
    const Eigen::VectorXd unit = x / x.norm();
    const double res = (qm * unit - q * unit).cwiseAbs().maxCoeff();
    if (res > 1e-7) {
        throw std::invalid_argument("not a least eigenvector (residual " + std::to_string(res) + ")");
    }
}

int argmax_abs(const Eigen::VectorXd& x) {
    int best = 0;
    for (int i = 1; i < x.size(); ++i) {
        if (std::abs(x[i]) > std::abs(x[best])) best = i;
    }
    return best;
}

}  // namespace

bool EigvecProfile::all_pass() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const AssertionRecord& a) { return a.pass; });
}

Eigen::VectorXd reflect_negate(const ThetaShape& shape, const Eigen::VectorXd& x) {
    if (x.size() != shape.order()) {
        throw std::invalid_argument("vector length does not match shape order");
    }
    const auto sigma = shape.reflection();
    Eigen::VectorXd f(x.size());
    for (int i = 0; i < x.size(); ++i) f[i] = -x[sigma[i]];
    return f;
}

EigvecProfile classify_theta_eigenvector(const ThetaShape& shape) {
    const Graph g = theta_graph(shape);
    const int n = shape.order();
    const auto space = least_eigenspace(g, kEigenspaceTol);
    const int dim = static_cast<int>(space.basis.cols());
    if (dim > 2) {
        throw AssertionFailure("least eigenspace of Theta(" + std::to_string(shape.j()) + "," +
                               std::to_string(shape.k()) + ") at n=" + std::to_string(n) +
                               " has dimension " + std::to_string(dim) + "; flagged for manual review");
    }
    const auto sigma = shape.reflection();

    // linear antisymmetry system: y_i + y_{sigma(i)} = 0 over reflection
    // orbits (fixed points give y_i = 0, v_0 included)
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (i <= sigma[i]) reps.push_back(i);
    }
    Eigen::MatrixXd constraints = Eigen::MatrixXd::Zero(static_cast<int>(reps.size()), n);
    for (size_t r = 0; r < reps.size(); ++r) {
        constraints(static_cast<int>(r), reps[r]) += 1.0;
        constraints(static_cast<int>(r), sigma[reps[r]]) += 1.0;
    }
    const Eigen::MatrixXd m = constraints * space.basis;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const double smin = svd.singularValues().tail(1)[0];

    EigvecProfile profile{shape, ThetaCase::asymmetric, dim, space.value, {}, {}};
    auto record = [&](const std::string& name, bool pass, double margin) {
        profile.assertions.push_back({name, pass, margin});
    };

    const auto evenP = even_path(shape);
    const auto oddP = odd_path(shape);

    if (smin < kKernelTol) {
        profile.kind = ThetaCase::symmetric;
        Eigen::VectorXd y = space.basis * svd.matrixV().col(dim - 1);
        y.normalize();
        profile.witness = y;

        const Eigen::MatrixXd qm = q_matrix(g);
        const double res = (qm * y - space.value * y).cwiseAbs().maxCoeff();
        record("witness-residual", res <= 1e-8, res);
        record("vanishes-at-v0", std::abs(y[0]) <= kEqualTol, std::abs(y[0]));
        double dev1 = 0.0, dev2 = 0.0;
        for (int v : shape.p1_vertices()) dev1 = std::max(dev1, std::abs(y[v] + y[sigma[v]]));
        for (int v : shape.p2_vertices()) dev2 = std::max(dev2, std::abs(y[v] + y[sigma[v]]));
        record("antisymmetry-p1", dev1 <= kEqualTol, dev1);
        record("antisymmetry-p2", dev2 <= kEqualTol, dev2);
        // the reflection's fixed midpoint of the even path must vanish and
        // its neighbor must not
        const int mid = evenP[evenP.size() / 2];
        const int prev = evenP[evenP.size() / 2 - 1];
        record("midpoint-zero", std::abs(y[mid]) <= kEqualTol, std::abs(y[mid]));
        record("midpoint-neighbor-nonzero", std::abs(y[prev]) > kStrictTol, std::abs(y[prev]));
        return profile;
    }

    // asymmetric case: the least eigenvector itself carries the structure
    Eigen::VectorXd w = space.basis.col(0);
    for (int i = 0; i < n; ++i) {
        if (std::abs(w[i]) > 1e-12) {
            if (w[i] < 0) w = -w;
            break;
        }
    }
    profile.witness = w;

    double dev1 = 0.0, dev2 = 0.0;
    for (int v : shape.p1_vertices()) dev1 = std::max(dev1, std::abs(w[v] - w[sigma[v]]));
    for (int v : shape.p2_vertices()) dev2 = std::max(dev2, std::abs(w[v] - w[sigma[v]]));
    record("mirror-p1", dev1 <= kEqualTol, dev1);
    record("mirror-p2", dev2 <= kEqualTol, dev2);

    double min_abs = w.cwiseAbs().minCoeff();
    record("nowhere-zero", min_abs > kStrictTol, min_abs);

    // sign alternation on every edge except the odd path's middle edge
    const int lo = static_cast<int>(oddP.size());
    const Edge excluded{std::min(oddP[lo / 2 - 1], oddP[lo / 2]),
                        std::max(oddP[lo / 2 - 1], oddP[lo / 2])};
    double worst_alt = 1e30, mid_prod = 0.0;
    for (auto e : g.edges()) {
        const double prod = w[e.first] * w[e.second];
        if (e == excluded) {
            mid_prod = prod;
        } else {
            worst_alt = std::min(worst_alt, -prod);
        }
    }
    record("sign-alternation", worst_alt > kStrictTol, worst_alt);
    record("middle-edge-same-sign", mid_prod > kStrictTol, mid_prod);

    // strict |w| growth along the even path from both hubs to its midpoint
    double grow = 1e30;
    for (size_t t = 1; t <= evenP.size() / 2; ++t) {
        grow = std::min(grow, std::abs(w[evenP[t]]) - std::abs(w[evenP[t - 1]]));
        const size_t r = evenP.size() - 1 - t;
        grow = std::min(grow, std::abs(w[evenP[r]]) - std::abs(w[evenP[r + 1]]));
    }
    record("growth-even-path", grow > kStrictTol, grow);

    const double v0_gap = std::min(std::abs(w[0]) - std::abs(w[shape.j()]),
                                   std::abs(w[0]) - std::abs(w[shape.k()]));
    record("v0-dominates-hubs", v0_gap > kStrictTol, v0_gap);

    // strict |w| decay along the odd path from both hubs to its middle edge
    if (oddP.size() > 2) {
        const double first = std::min(std::abs(w[oddP[0]]) - std::abs(w[oddP[1]]),
                                      std::abs(w[oddP[lo - 1]]) - std::abs(w[oddP[lo - 2]]));
        record("hub-dominates-odd-path", first > kStrictTol, first);
        double decay = 1e30;
        for (int t = 2; t <= lo / 2 - 1; ++t) {
            decay = std::min(decay, std::abs(w[oddP[t - 1]]) - std::abs(w[oddP[t]]));
            const int r = lo - 1 - t;
            decay = std::min(decay, std::abs(w[oddP[r + 1]]) - std::abs(w[oddP[r]]));
        }
        if (decay < 1e30) record("decay-odd-path", decay > kStrictTol, decay);
    }
    return profile;
}

std::optional<Eigen::VectorXd> symmetrize_eigenvector(const ThetaShape& shape,
                                                      const Eigen::VectorXd& x) {
    const Graph g = theta_graph(shape);
    const double q = least_q(g).value;
    check_is_least_eigenvector(g, x, q);
    const Eigen::VectorXd y = x + reflect_negate(shape, x);
    if (y.cwiseAbs().maxCoeff() <= 1e-9 * x.cwiseAbs().maxCoeff()) {
        return std::nullopt;
    }
    const Eigen::MatrixXd qm = q_matrix(g);
    const Eigen::VectorXd unit = y / y.norm();
    const double res = (qm * unit - q * unit).cwiseAbs().maxCoeff();
    if (res > 1e-7) {
        throw AssertionFailure("symmetrized vector is not an eigenvector (residual " +
                               std::to_string(res) + ")");
    }
    return y;
}

namespace {

struct AbsorbSetup {
    int mu = 0;
    int succ = 0;                // deleted cycle edge is (mu, succ)
    std::vector<int> outside;    // ascending
    std::vector<Edge> base;      // E(C) minus the deleted edge
};

AbsorbSetup absorb_setup(const Graph& g, const VertexPath& c, const Eigen::VectorXd& x,
                         const char* who) {
    if (!is_two_connected(g)) throw std::invalid_argument(std::string(who) + ": G is not 2-connected");
    if (!is_valid_path(g, c, /*closed=*/true) || c.verts.size() % 2 == 0) {
        throw std::invalid_argument(std::string(who) + ": C is not an odd cycle of G");
    }
    AbsorbSetup s;
    s.mu = argmax_abs(x);
    auto pos = std::find(c.verts.begin(), c.verts.end(), s.mu);
    if (pos == c.verts.end()) {
        throw std::invalid_argument(std::string(who) + ": C does not contain the max-|x| vertex");
    }
    s.succ = (pos + 1 == c.verts.end()) ? c.verts.front() : *(pos + 1);
    std::vector<char> on_c(g.order(), 0);
    for (int v : c.verts) on_c[v] = 1;
    for (int v = 0; v < g.order(); ++v) {
        if (!on_c[v]) s.outside.push_back(v);
    }
    const size_t L = c.verts.size();
    for (size_t i = 0; i < L; ++i) {
        int a = c.verts[i], b = c.verts[(i + 1) % L];
        if ((a == s.mu && b == s.succ) || (a == s.succ && b == s.mu)) continue;
        s.base.emplace_back(std::min(a, b), std::max(a, b));
    }
    return s;
}

RewireResult finish_rewire(const Graph& g, Graph target, const Eigen::VectorXd& x,
                           const AbsorbSetup& s, const char* who) {
    const double q_before = least_q(g).value;
    check_is_least_eigenvector(g, x, q_before);
    Eigen::VectorXd y = x;
    for (size_t t = 0; t < s.outside.size(); ++t) {
        y[s.outside[t]] = ((t + 1) % 2 == 1 ? -1.0 : 1.0) * x[s.mu];
    }
    const double ray = rayleigh(target, y);
    if (ray > q_before + kStrictTol) {
        throw AssertionFailure(std::string(who) + ": transferred Rayleigh value " +
                               std::to_string(ray) + " exceeds q(G) = " + std::to_string(q_before));
    }
    const double q_after = least_q(target).value;
    const double margin = q_before - q_after;
    if (margin <= kStrictTol) {
        throw AssertionFailure(std::string(who) + ": q did not strictly decrease (margin " +
                               std::to_string(margin) + ")");
    }
    return RewireResult{g, std::move(target), std::move(y), q_before, ray, q_before, q_after, margin};
}

}  // namespace

RewireResult rewire_cycle_absorb(const Graph& g, const VertexPath& c, const Eigen::VectorXd& x) {
    const int n = g.order();
    if (n % 2 == 0) throw std::invalid_argument("rewire_cycle_absorb: order must be odd");
    if (static_cast<int>(c.verts.size()) == n) {
        throw std::invalid_argument("rewire_cycle_absorb: |V(C)| = n, nothing to absorb");
    }
    AbsorbSetup s = absorb_setup(g, c, x, "rewire_cycle_absorb");
    auto edges = s.base;
    int prev = s.mu;
    for (int v : s.outside) {
        edges.emplace_back(std::min(prev, v), std::max(prev, v));
        prev = v;
    }
    edges.emplace_back(std::min(prev, s.succ), std::max(prev, s.succ));
    Graph target(n, edges);
    for (int v = 0; v < n; ++v) {
        if (target.degree(v) != 2) {
            throw AssertionFailure("rewire_cycle_absorb: target is not a cycle");
        }
    }
    if (!is_connected(target)) throw AssertionFailure("rewire_cycle_absorb: target disconnected");
    return finish_rewire(g, std::move(target), x, s, "rewire_cycle_absorb");
}

RewireResult rewire_theta_absorb(const Graph& g, const VertexPath& c, const Eigen::VectorXd& x) {
    const int n = g.order();
    if (n % 2 == 1) throw std::invalid_argument("rewire_theta_absorb: order must be even");
    const int gap = n - static_cast<int>(c.verts.size());
    if (gap < 3) {
        throw std::invalid_argument("rewire_theta_absorb: n - L(C) = " + std::to_string(gap) +
                                    " < 3; use the direct theta-dominance route for L(C) = n-1");
    }
    AbsorbSetup s = absorb_setup(g, c, x, "rewire_theta_absorb");
    // thread all but the last outside vertex into the cycle, then attach the
    // last one to v_mu and to the second threaded vertex (cycle-distance 2)
    auto edges = s.base;
    const int k = static_cast<int>(s.outside.size());
    int prev = s.mu;
    for (int t = 0; t < k - 1; ++t) {
        int v = s.outside[t];
        edges.emplace_back(std::min(prev, v), std::max(prev, v));
        prev = v;
    }
    edges.emplace_back(std::min(prev, s.succ), std::max(prev, s.succ));
    const int last = s.outside[k - 1], second = s.outside[1];
    edges.emplace_back(std::min(s.mu, last), std::max(s.mu, last));
    edges.emplace_back(std::min(last, second), std::max(last, second));
    Graph target(n, edges);
    auto lens = theta_path_lengths(target);
    if (!lens || !(lens->at(0) == 2 && lens->at(1) == 2 && lens->at(2) == n - 3)) {
        throw AssertionFailure("rewire_theta_absorb: target is not isomorphic to Theta");
    }
    return finish_rewire(g, std::move(target), x, s, "rewire_theta_absorb");
}

DominanceResult verify_theta_dominance(const ThetaShape& shape) {
    DominanceResult r;
    r.q_star = least_q(theta_star(shape.order())).value;
    r.q_shape = least_q(theta_graph(shape)).value;
    r.margin = r.q_shape - r.q_star;
    r.isomorphic_to_star = shape.is_theta_star();
    if (r.isomorphic_to_star) {
        r.pass = std::abs(r.margin) <= kStrictTol;
    } else {
        r.pass = r.margin > kStrictTol;
    }
    return r;
}

}  // namespace qmin
