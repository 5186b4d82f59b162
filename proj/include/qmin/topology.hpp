// topology.hpp — connectivity predicates, bipartiteness witnesses, and the
// constructive inner-disjoint path machinery.
#pragma once
#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "qmin/graph.hpp"

namespace qmin {

/// Ordered vertex sequence; consecutive vertices must be adjacent in the host
/// graph and no vertex repeats. For cycles the closing edge is implicit.
struct VertexPath {
    std::vector<int> verts;

    int length() const { return static_cast<int>(verts.size()) - 1; }
    bool contains(int v) const;
};

/// Checks path validity against g (adjacency of consecutive vertices, no
/// repeats). If closed, also requires the wrap-around edge.
bool is_valid_path(const Graph& g, const VertexPath& p, bool closed = false);

/// Two paths from a common vertex xi with V(P1) ∩ V(P2) = {xi}.
struct PathPair {
    VertexPath first;
    VertexPath second;
    int common;  // xi, the shared origin
};

using TwoColoring = std::vector<int>;  // 0/1 per vertex

bool is_connected(const Graph& g);

/// For connected g: either a proper 2-coloring or an odd cycle witness
/// (closed VertexPath, start vertex not repeated at the end).
std::variant<TwoColoring, VertexPath> bipartite_or_odd_cycle(const Graph& g);

bool is_bipartite(const Graph& g);

/// Connected, n >= 3, no articulation vertex (depth-first lowpoint).
bool is_two_connected(const Graph& g);

/// Maximum number of pairwise inner-disjoint u-v paths (vertex-capacitated
/// max flow with vertex splitting). Deterministic lowest-index augmentation.
int local_connectivity(const Graph& g, int u, int v);

/// min over non-adjacent pairs of local_connectivity; n-1 for complete
/// graphs; 0 for disconnected input.
int vertex_connectivity(const Graph& g);

/// Two paths from xi to the endpoints of an edge uv of cycle c, meeting only
/// at xi. Built via the auxiliary graph G - uv + (u,w,v) with a fresh vertex
/// w and a 2-unit flow from xi to w.
PathPair two_paths_to_edge(const Graph& g, const VertexPath& c, Edge e, int xi);

/// Two paths from xi to cycle c, each meeting c exactly in its terminal
/// vertex, sharing only xi. Terminals are the attachment vertices.
PathPair two_paths_to_cycle(const Graph& g, const VertexPath& c, int xi);

/// Shortest odd cycle containing mu in a nonbipartite 2-connected graph,
/// returned as a closed VertexPath starting at mu.
VertexPath odd_cycle_through(const Graph& g, int mu);

/// If g decomposes as three pairwise inner-disjoint paths between two common
/// endpoints (a theta graph), returns the sorted path lengths; otherwise
/// nullopt.
std::optional<std::array<int, 3>> theta_path_lengths(const Graph& g);

}  // namespace qmin
