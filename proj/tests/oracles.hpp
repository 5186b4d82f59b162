// oracles.hpp — brute-force reference implementations used only by tests.
// Each is deliberately independent of the library code path it checks.
#pragma once
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

#include "qmin/graph.hpp"

namespace oracles {

// minimum upper-triangle bitstring by trying every permutation explicitly
inline uint64_t brute_canonical_bits(const qmin::Graph& g) {
    const int n = g.order();
    const int total = n * (n - 1) / 2;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t bits = 0;
        int pos = 0;
        for (int col = 1; col < n; ++col) {
            for (int row = 0; row < col; ++row, ++pos) {
                if (g.has_edge(perm[row], perm[col])) bits |= uint64_t{1} << (total - 1 - pos);
            }
        }
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// every simple u-v path, as inner-vertex bitmasks
inline void all_paths_inner(const qmin::Graph& g, int u, int v, std::vector<uint64_t>& out) {
    uint64_t used = uint64_t{1} << u;
    std::vector<std::vector<int>> nbrs(g.order());
    for (int w = 0; w < g.order(); ++w) nbrs[w] = g.neighbors(w);

    struct Frame {
        int vertex;
        size_t next = 0;
    };
    std::vector<Frame> frames{{u, 0}};
    while (!frames.empty()) {
        auto& f = frames.back();
        if (f.next >= nbrs[f.vertex].size()) {
            used &= ~(uint64_t{1} << f.vertex);
            frames.pop_back();
            continue;
        }
        int w = nbrs[f.vertex][f.next++];
        if (w == v) {
            uint64_t inner = used & ~(uint64_t{1} << u);
            out.push_back(inner);
            continue;
        }
        if ((used >> w) & 1) continue;
        used |= uint64_t{1} << w;
        frames.push_back({w, 0});
    }
}

// maximum family of pairwise inner-disjoint u-v paths, by direct search
inline int brute_inner_disjoint_max(const qmin::Graph& g, int u, int v) {
    std::vector<uint64_t> paths;
    all_paths_inner(g, u, v, paths);
    // equal inner sets give identical continuations; keep one
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    std::sort(paths.begin(), paths.end(), [](uint64_t a, uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    int best = 0;
    const int n = g.order();
    // chosen paths must have pairwise disjoint inner sets
    std::vector<size_t> order(paths.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::function<void(size_t, uint64_t, int)> rec = [&](size_t from, uint64_t used, int count) {
        best = std::max(best, count);
        // each further path needs >= 1 unused inner vertex unless it is the
        // direct edge (inner mask 0, usable at most once and sorted first)
        int free_inner = n - 2 - std::popcount(used);
        if (count + free_inner + (from == 0 && !paths.empty() && paths[0] == 0 ? 1 : 0) <= best) {
            return;
        }
        for (size_t i = from; i < paths.size(); ++i) {
            if (paths[i] & used) continue;
            if (paths[i] == 0 && i > 0) continue;  // only one direct edge exists anyway
            rec(i + 1, used | paths[i], count + 1);
        }
    };
    rec(0, 0, 0);
    return best;
}

// Q-spectrum of C_n in closed form: {2 + 2 cos(2 pi k / n)}
inline std::vector<double> cycle_spectrum(int n) {
    std::vector<double> out;
    for (int k = 0; k < n; ++k) out.push_back(2.0 + 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
    std::sort(out.begin(), out.end());
    return out;
}

// bipartiteness by trying all two-colorings (independent of BFS)
inline bool brute_bipartite(const qmin::Graph& g) {
    const int n = g.order();
    for (uint64_t side = 0; side < (uint64_t{1} << (n - 1)); ++side) {
        bool ok = true;
        for (auto [a, b] : g.edges()) {
            const int ca = a == 0 ? 0 : static_cast<int>((side >> (a - 1)) & 1);
            const int cb = b == 0 ? 0 : static_cast<int>((side >> (b - 1)) & 1);
            if (ca == cb) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// all labeled graphs on n vertices, reduced to classes by the brute canonical
inline std::set<uint64_t> edge_subset_classes(int n) {
    std::vector<qmin::Edge> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::set<uint64_t> classes;
    for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); ++mask) {
        std::vector<qmin::Edge> es;
        for (size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1) es.push_back(slots[i]);
        }
        classes.insert(brute_canonical_bits(qmin::Graph(n, es)));
    }
    return classes;
}

}  // namespace oracles
