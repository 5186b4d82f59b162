#include "qmin/topology.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "qmin/errors.hpp"

namespace qmin {

bool VertexPath::contains(int v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool is_valid_path(const Graph& g, const VertexPath& p, bool closed) {
    const auto& vs = p.verts;
    if (vs.empty()) return false;
    std::vector<char> seen(g.order(), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!g.has_edge(vs[i], vs[i + 1])) return false;
    }
    if (closed) {
        if (vs.size() < 3) return false;
        if (!g.has_edge(vs.back(), vs.front())) return false;
    }
    return true;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    uint64_t seen = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        uint64_t fresh = g.neighbor_mask(v) & ~seen;
        seen |= fresh;
        while (fresh) {
            queue.push_back(std::countr_zero(fresh));
            fresh &= fresh - 1;
        }
    }
    return std::popcount(seen) == n;
}

std::variant<TwoColoring, VertexPath> bipartite_or_odd_cycle(const Graph& g) {
    if (!is_connected(g)) {
        throw ContractViolation("bipartite_or_odd_cycle requires a connected graph");
    }
    const int n = g.order();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    color[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (color[u] == -1) {
                color[u] = 1 - color[v];
                parent[u] = v;
                depth[u] = depth[v] + 1;
                queue.push_back(u);
            } else if (color[u] == color[v]) {
                // odd cycle: tree paths from v and u to their lowest common
                // ancestor, plus the edge uv
                std::vector<int> up_v, up_u;
                int a = v, b = u;
                while (depth[a] > depth[b]) { up_v.push_back(a); a = parent[a]; }
                while (depth[b] > depth[a]) { up_u.push_back(b); b = parent[b]; }
                while (a != b) {
                    up_v.push_back(a); a = parent[a];
                    up_u.push_back(b); b = parent[b];
                }
                VertexPath cyc;
                cyc.verts.push_back(a);  // the common ancestor
                for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) cyc.verts.push_back(*it);
                for (int w : up_u) cyc.verts.push_back(w);
                return cyc;
            }
        }
    }
    return TwoColoring(color.begin(), color.end());
}

bool is_bipartite(const Graph& g) {
    return std::holds_alternative<TwoColoring>(bipartite_or_odd_cycle(g));
}

namespace {

struct Lowpoint {
    const Graph& g;
    std::vector<int> disc, low;
    int timer = 0;
    bool has_cut = false;

    explicit Lowpoint(const Graph& gg) : g(gg), disc(gg.order(), -1), low(gg.order(), 0) {}

    void dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (u == parent) continue;
            if (disc[u] == -1) {
                ++children;
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (parent != -1 && low[u] >= disc[v]) has_cut = true;
            } else {
                low[v] = std::min(low[v], disc[u]);
            }
        }
        if (parent == -1 && children > 1) has_cut = true;
    }
};

}  // namespace

bool is_two_connected(const Graph& g) {
    if (g.order() < 3) {
        throw std::invalid_argument("is_two_connected requires n >= 3");
    }
    if (!is_connected(g)) return false;
    Lowpoint lp(g);
    lp.dfs(0, -1);
    return !lp.has_cut;
}

namespace {

// Unit-capacity max flow on the vertex-split digraph. Node 2v = v_in,
// 2v+1 = v_out; internal arc (v_in, v_out) capacity 1 except at terminals.
// Augmenting paths found by BFS scanning arcs in ascending node order so
// witnesses are deterministic.
struct SplitFlow {
    int n;
    std::vector<std::vector<int>> cap;  // dense, 2n x 2n (n <= 65)

    explicit SplitFlow(const Graph& g, int extra = 0) : n(g.order() + extra) {
        cap.assign(2 * n, std::vector<int>(2 * n, 0));
        for (int v = 0; v < g.order(); ++v) cap[2 * v][2 * v + 1] = 1;
        for (auto [a, b] : g.edges()) add_undirected(a, b);
    }

    void add_vertex_internal(int v) { cap[2 * v][2 * v + 1] = 1; }

    void add_undirected(int a, int b) {
        cap[2 * a + 1][2 * b] = 1;
        cap[2 * b + 1][2 * a] = 1;
    }

    // source = s_out, sink = t_in; terminal internal arcs unconstrained
    int max_flow(int s, int t, int limit) {
        const int S = 2 * s + 1, T = 2 * t;
        cap[2 * s][2 * s + 1] = limit;  // never binding
        cap[2 * t][2 * t + 1] = limit;
        int total = 0;
        while (total < limit) {
            std::vector<int> prev(2 * n, -1);
            prev[S] = S;
            std::deque<int> queue{S};
            while (!queue.empty() && prev[T] == -1) {
                int x = queue.front();
                queue.pop_front();
                for (int y = 0; y < 2 * n; ++y) {
                    if (cap[x][y] > 0 && prev[y] == -1) {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if (prev[T] == -1) break;
            for (int y = T; y != S; y = prev[y]) {
                cap[prev[y]][y] -= 1;
                cap[y][prev[y]] += 1;
            }
            ++total;
        }
        return total;
    }

    // After max_flow, peel one unit path following saturated arcs
    // (lowest-index-first), consuming the flow as it goes. The returned
    // vertex list runs from s up to (not including) t.
    std::vector<int> extract_path(const std::vector<std::vector<int>>& orig, int s, int t) {
        std::vector<int> path{s};
        int x = 2 * s + 1;
        const int T = 2 * t;
        for (;;) {
            int next = -1;
            for (int y = 0; y < 2 * n; ++y) {
                if (orig[x][y] > cap[x][y]) {  // forward flow on arc x->y
                    next = y;
                    break;
                }
            }
            if (next == -1) throw std::runtime_error("flow decomposition failed");
            cap[x][next] += 1;  // consume
            x = next;
            if (x == T) break;
            path.push_back(x / 2);
            cap[x][x + 1] += 1;
            x += 1;
        }
        return path;
    }
};

}  // namespace

int local_connectivity(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("local_connectivity requires u != v");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
        throw std::invalid_argument("local_connectivity vertex out of range");
    }
    SplitFlow f(g);
    return f.max_flow(u, v, g.order());
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("vertex_connectivity requires n >= 2");
    if (!is_connected(g)) return 0;
    if (g.size() == n * (n - 1) / 2) return n - 1;  // complete graph convention
    int best = n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) best = std::min(best, local_connectivity(g, u, v));
        }
    }
    return best;
}

namespace {

void require_cycle_in(const Graph& g, const VertexPath& c, const char* who) {
    if (!is_valid_path(g, c, /*closed=*/true)) {
        throw std::invalid_argument(std::string(who) + ": C is not a cycle of G");
    }
}

}  // namespace

PathPair two_paths_to_edge(const Graph& g, const VertexPath& c, Edge e, int xi) {
    if (!is_two_connected(g)) {
        throw std::invalid_argument("two_paths_to_edge: G is not 2-connected");
    }
    require_cycle_in(g, c, "two_paths_to_edge");
    auto [u, v] = e;
    bool on_cycle = false;
    const auto& vs = c.verts;
    for (size_t i = 0; i < vs.size(); ++i) {
        int a = vs[i], b = vs[(i + 1) % vs.size()];
        if ((a == u && b == v) || (a == v && b == u)) on_cycle = true;
    }
    if (!on_cycle) throw std::invalid_argument("two_paths_to_edge: e is not an edge of C");
    if (xi < 0 || xi >= g.order()) throw std::invalid_argument("two_paths_to_edge: xi out of range");
    if (c.contains(xi)) throw std::invalid_argument("two_paths_to_edge: xi lies on C");

    // G' = G - uv + path u,w,v with fresh vertex w; two inner-disjoint
    // xi-w paths exist by Menger, one through u, one through v.
    const int w = g.order();
    SplitFlow f(g, 1);
    f.add_vertex_internal(w);
    f.cap[2 * u + 1][2 * v] = 0;
    f.cap[2 * v + 1][2 * u] = 0;
    f.add_undirected(u, w);
    f.add_undirected(v, w);
    auto orig = f.cap;
    orig[2 * xi][2 * xi + 1] = 2;
    orig[2 * w][2 * w + 1] = 2;
    int pushed = f.max_flow(xi, w, 2);
    if (pushed != 2) throw std::runtime_error("two_paths_to_edge: flow < 2 in 2-connected graph");
    auto p1 = f.extract_path(orig, xi, w);  // w excluded; paths end at u or v
    auto p2 = f.extract_path(orig, xi, w);
    if (p1.back() == v) std::swap(p1, p2);  // P1 ends at u, P2 at v
    return PathPair{VertexPath{p1}, VertexPath{p2}, xi};
}

PathPair two_paths_to_cycle(const Graph& g, const VertexPath& c, int xi) {
    // pick the first cycle edge deterministically; truncate the Lemma 3.1
    // paths at their first contact with C
    require_cycle_in(g, c, "two_paths_to_cycle");
    Edge e{c.verts[0], c.verts[1]};
    PathPair raw = two_paths_to_edge(g, c, e, xi);
    auto truncate = [&](const VertexPath& p) {
        VertexPath out;
        for (int v : p.verts) {
            out.verts.push_back(v);
            if (c.contains(v)) break;
        }
        return out;
    };
    return PathPair{truncate(raw.first), truncate(raw.second), xi};
}

namespace {

// Parity-aware distances to mu on the bipartite double cover; used to prune
// the shortest-odd-cycle search.
std::vector<std::array<int, 2>> parity_dist(const Graph& g, int mu) {
    const int INF = 1 << 20;
    std::vector<std::array<int, 2>> d(g.order(), {INF, INF});
    d[mu][0] = 0;
    std::deque<std::pair<int, int>> queue{{mu, 0}};
    while (!queue.empty()) {
        auto [v, p] = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (d[u][1 - p] > d[v][p] + 1) {
                d[u][1 - p] = d[v][p] + 1;
                queue.emplace_back(u, 1 - p);
            }
        }
    }
    return d;
}

struct OddCycleSearch {
    const Graph& g;
    int mu;
    std::vector<std::array<int, 2>> dist;
    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<int> best;

    OddCycleSearch(const Graph& gg, int m) : g(gg), mu(m), dist(parity_dist(gg, m)), on_path(gg.order(), 0) {}

    void dfs() {
        int v = path.back();
        int len = static_cast<int>(path.size());
        if (!best.empty() && len + 1 > static_cast<int>(best.size())) return;
        for (int u : g.neighbors(v)) {
            if (u == mu && len >= 3 && len % 2 == 1) {
                if (best.empty() || len < static_cast<int>(best.size())) best = path;
            }
            if (on_path[u]) continue;
            // after extending to u the path has len edges; the return leg must
            // have parity (len+1) mod 2 to close an odd cycle
            int need = (len + 1) % 2;
            if (dist[u][need] >= (1 << 20)) continue;
            int lower = len + dist[u][need];
            if (!best.empty() && lower >= static_cast<int>(best.size())) continue;
            on_path[u] = 1;
            path.push_back(u);
            dfs();
            path.pop_back();
            on_path[u] = 0;
        }
    }
};

}  // namespace

VertexPath odd_cycle_through(const Graph& g, int mu) {
    if (mu < 0 || mu >= g.order()) throw std::invalid_argument("odd_cycle_through: vertex out of range");
    if (!is_two_connected(g)) {
        throw std::invalid_argument("odd_cycle_through: G is not 2-connected");
    }
    if (is_bipartite(g)) {
        throw std::invalid_argument("odd_cycle_through: G is bipartite");
    }
    OddCycleSearch search(g, mu);
    search.on_path[mu] = 1;
    search.path.push_back(mu);
    search.dfs();
    if (search.best.empty()) throw std::runtime_error("odd_cycle_through: no odd cycle found");
    auto cyc = search.best;
    // canonical direction: smaller second vertex
    if (cyc.size() >= 3 && cyc[1] > cyc.back()) {
        std::reverse(cyc.begin() + 1, cyc.end());
    }
    return VertexPath{cyc};
}

std::optional<std::array<int, 3>> theta_path_lengths(const Graph& g) {
    const int n = g.order();
    if (n < 4 || g.size() != n + 1 || !is_connected(g)) return std::nullopt;
    std::vector<int> hubs;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == 3) hubs.push_back(v);
        else if (d != 2) return std::nullopt;
    }
    if (hubs.size() != 2) return std::nullopt;
    std::array<int, 3> lens{};
    int t = 0;
    for (int start : g.neighbors(hubs[0])) {
        int prev = hubs[0], cur = start, len = 1;
        while (g.degree(cur) == 2) {
            for (int u : g.neighbors(cur)) {
                if (u != prev) {
                    prev = cur;
                    cur = u;
                    break;
                }
            }
            ++len;
        }
        if (cur != hubs[1]) return std::nullopt;  // a chain returning to its own hub
        lens[t++] = len;
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

}  // namespace qmin
