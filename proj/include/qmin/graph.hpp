// graph.hpp — simple undirected labeled graphs, the named extremal families,
// and graph6 text serialization.
#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qmin {

using Edge = std::pair<int, int>;  // stored normalized, first < second

/// Simple undirected graph on vertices 0..n-1, at most 64 vertices.
/// Immutable after construction; mutating operations return new values.
class Graph {
  public:
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    int size() const { return m_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    int degree(int v) const;
    uint64_t neighbor_mask(int v) const { return adj_[v]; }
    std::vector<int> neighbors(int v) const;      // ascending
    std::vector<Edge> edges() const;              // sorted lexicographically
    int min_degree() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<uint64_t> adj_;  // adj_[v] bit u set iff edge uv
};

Graph make_graph(int n, std::span<const Edge> edges);
Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);

/// C_n = v_0 v_1 ... v_{n-1} v_0, n >= 3.
Graph cycle(int n);

/// H(i_1,...,i_k) = C_n + chords v_{i_t} v_{n-i_t}. Requires n >= 5 odd and
/// strictly increasing indices in [1, (n-3)/2].
Graph h_graph(int n, std::span<const int> indices);

/// The (n, j, k) parameterization of Theta(j,k): an odd cycle
/// v_1 v_2 ... v_{n-1} v_1 plus vertex v_0 joined to v_j and v_k.
/// P1 runs v_j..v_k along increasing index; P2 is the complementary arc
/// v_j, v_{eta_1}, ..., v_{eta_z}, v_k with z = n - k + j - 2.
class ThetaShape {
  public:
    ThetaShape(int n, int j, int k);

    int order() const { return n_; }
    int j() const { return j_; }
    int k() const { return k_; }
    int z() const { return n_ - k_ + j_ - 2; }
    int eta(int i) const;                  // 1-based, 1 <= i <= z
    std::vector<int> p1_vertices() const;  // v_j .. v_k
    std::vector<int> p2_vertices() const;  // v_j, eta..., v_k
    std::vector<int> cycle_vertices() const;  // v_1 .. v_{n-1}

    // The hub-swapping reflection automorphism: v_i -> v_{k+j-i} on P1,
    // eta_i -> eta_{z+1-i}, v_0 fixed.
    std::vector<int> reflection() const;

    // Theta(j,k) is isomorphic to Theta = Theta(2, n-1) exactly when the
    // chord splits the cycle into arcs of lengths {2, n-3}.
    bool is_theta_star() const { return k_ - j_ == 2 || k_ - j_ == n_ - 3; }

  private:
    int n_, j_, k_;
};

Graph theta_graph(const ThetaShape& shape);

/// Theta = Theta(2, n-1), the even-order extremal graph. n >= 4 even.
Graph theta_star(int n);

/// Generic theta graph from its three inner-disjoint hub-to-hub path lengths,
/// 1 <= a <= b <= c, at most one length equal to 1. Order a+b+c-1.
Graph theta_from_path_lengths(int a, int b, int c);

/// graph6 encoding (printable, 6-bit upper-triangle), n <= 62.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace qmin
