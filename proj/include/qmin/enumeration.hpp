// enumeration.hpp — exhaustive generation of small graphs up to isomorphism
// and end-to-end certification of the extremal theorems at desk scale.
#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qmin/graph.hpp"

namespace qmin {

/// Exact isomorphism invariant: the lexicographically smallest upper-triangle
/// adjacency bitstring over all vertex orderings (column-major bit order, the
/// graph6 layout), packed most-significant-first. Limited to n <= 11.
struct CanonicalForm {
    int n = 0;
    uint64_t bits = 0;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph graph_from_canonical(const CanonicalForm& form);
bool is_isomorphic(const Graph& a, const Graph& b);

/// graph6 string of the canonically relabeled graph.
std::string canonical_graph6(const Graph& g);

/// Streams one canonically labeled representative per isomorphism class of
/// simple graphs on n vertices (3 <= n <= 9) satisfying the predicate.
/// Generation is by vertex augmentation with canonical-form deduplication;
/// visit order is deterministic.
void enumerate_graphs(int n, const std::function<bool(const Graph&)>& predicate,
                      const std::function<void(const Graph&)>& sink);

/// Known unlabeled simple-graph counts for the self-check, n = 3..9.
long long expected_class_count(int n);

bool is_theta(const Graph& g);
bool is_hamiltonian(const Graph& g);

struct EnumerationReport {
    int order = 0;
    std::string parity;
    std::string family;     // predicate the run quantified over
    long long graph_count = 0;
    double min_q = 0.0;
    double expected_min_q = 0.0;
    std::vector<std::string> argmin_graph6;    // canonical graph6, sorted
    std::vector<std::string> expected_graph6;  // canonical graph6, sorted
    bool pass = false;
    double tolerance = 0.0;
    double wall_seconds = 0.0;
};

/// Theorem: over nonbipartite 2-connected graphs of order n, the minimum
/// least Q-eigenvalue is q(C_n) for odd n with argmin set {C_n, H(...)}, and
/// q(Theta) for even n with Theta the unique argmin. 3 <= n <= 9.
/// If external_graph6 is nonempty those graphs (one per line, deduplicated
/// up to isomorphism) replace self-generation.
EnumerationReport verify_theorem_1(int n, int jobs = 1,
                                   const std::vector<std::string>& external_graph6 = {});

/// Same statement restricted to nonbipartite theta graphs, swept directly
/// over the three path lengths. Odd n argmins are the H(i); even n argmin is
/// Theta. 4 <= n <= 12.
EnumerationReport verify_theorem_2(int n);

/// Imported floor at odd order: over nonbipartite Hamiltonian graphs,
/// min q = q(C_n) and every argmin is C_n or an H(...). n in {5, 7}.
EnumerationReport hamiltonian_floor_check(int n);

}  // namespace qmin
