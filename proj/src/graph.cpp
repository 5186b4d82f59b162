#include "qmin/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qmin {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1 || n > 64) {
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
    }
    adj_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("loop edge " + pair_str(u, v));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range " + pair_str(u, v));
        }
        if (has_edge(u, v)) {
            throw std::invalid_argument("duplicate edge " + pair_str(u, v));
        }
        adj_[u] |= uint64_t{1} << v;
        adj_[v] |= uint64_t{1} << u;
        ++m_;
    }
}

int Graph::degree(int v) const {
    return std::popcount(adj_[v]);
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree(v));
    uint64_t m = adj_[v];
    while (m) {
        int u = std::countr_zero(m);
        out.push_back(u);
        m &= m - 1;
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        uint64_t m = adj_[u] >> (u + 1) << (u + 1);  // neighbors above u
        while (m) {
            int v = std::countr_zero(m);
            out.emplace_back(u, v);
            m &= m - 1;
        }
    }
    return out;
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

Graph make_graph(int n, std::span<const Edge> edges) {
    return Graph(n, edges);
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("cannot add loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
        throw std::invalid_argument("add_edge endpoint out of range " + pair_str(u, v));
    }
    if (g.has_edge(u, v)) throw std::invalid_argument("edge exists " + pair_str(u, v));
    auto es = g.edges();
    es.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(g.order(), es);
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
        throw std::invalid_argument("remove_edge endpoint out of range " + pair_str(u, v));
    }
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge absent " + pair_str(u, v));
    auto es = g.edges();
    std::erase(es, Edge{std::min(u, v), std::max(u, v)});
    return Graph(g.order(), es);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> es;
    es.reserve(n);
    for (int i = 0; i < n; ++i) {
        int a = i, b = (i + 1) % n;
        es.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph(n, es);
}

Graph h_graph(int n, std::span<const int> indices) {
    if (n < 5 || n % 2 == 0) {
        throw std::invalid_argument("h_graph needs odd n >= 5, got " + std::to_string(n));
    }
    const int half = (n - 3) / 2;
    if (indices.empty() || static_cast<int>(indices.size()) > half) {
        throw std::invalid_argument("h_graph needs between 1 and (n-3)/2 chord indices");
    }
    int prev = 0;
    for (int i : indices) {
        if (i < 1 || i > half) {
            throw std::invalid_argument("chord index " + std::to_string(i) + " outside [1, " + std::to_string(half) + "]");
        }
        if (i <= prev) {
            throw std::invalid_argument("chord indices must be strictly increasing at " + std::to_string(i));
        }
        prev = i;
    }
    Graph g = cycle(n);
    for (int i : indices) g = add_edge(g, i, n - i);
    return g;
}

ThetaShape::ThetaShape(int n, int j, int k) : n_(n), j_(j), k_(k) {
    if (n < 4 || n % 2 == 1) {
        throw std::invalid_argument("theta shape needs even n >= 4, got " + std::to_string(n));
    }
    if (!(1 <= j && j < k && k <= n - 1)) {
        throw std::invalid_argument("theta shape needs 1 <= j < k <= n-1, got " + pair_str(j, k));
    }
}

int ThetaShape::eta(int i) const {
    if (i < 1 || i > z()) throw std::invalid_argument("eta index out of range " + std::to_string(i));
    // walking P2 from v_j: v_{j-1}, ..., v_1, then v_{n-1}, ..., v_{k+1}
    if (i <= j_ - 1) return j_ - i;
    return n_ - (i - j_ + 1);
}

std::vector<int> ThetaShape::p1_vertices() const {
    std::vector<int> out;
    for (int i = j_; i <= k_; ++i) out.push_back(i);
    return out;
}

std::vector<int> ThetaShape::p2_vertices() const {
    std::vector<int> out{j_};
    for (int i = 1; i <= z(); ++i) out.push_back(eta(i));
    out.push_back(k_);
    return out;
}

std::vector<int> ThetaShape::cycle_vertices() const {
    std::vector<int> out;
    for (int i = 1; i <= n_ - 1; ++i) out.push_back(i);
    return out;
}

std::vector<int> ThetaShape::reflection() const {
    std::vector<int> sigma(n_);
    sigma[0] = 0;
    for (int i = j_; i <= k_; ++i) sigma[i] = k_ + j_ - i;
    for (int i = 1; i <= z(); ++i) sigma[eta(i)] = eta(z() + 1 - i);
    return sigma;
}

Graph theta_graph(const ThetaShape& shape) {
    const int n = shape.order();
    std::vector<Edge> es;
    for (int i = 1; i < n - 1; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(1, n - 1);
    es.emplace_back(0, shape.j());
    es.emplace_back(0, shape.k());
    return Graph(n, es);
}

Graph theta_star(int n) {
    if (n < 4 || n % 2 == 1) {
        throw std::invalid_argument("theta_star needs even n >= 4, got " + std::to_string(n));
    }
    return theta_graph(ThetaShape(n, 2, n - 1));
}

Graph theta_from_path_lengths(int a, int b, int c) {
    if (!(1 <= a && a <= b && b <= c)) {
        throw std::invalid_argument("path lengths must satisfy 1 <= a <= b <= c");
    }
    if (a == 1 && b == 1) {
        throw std::invalid_argument("two length-1 paths would form a multi-edge");
    }
    const int n = a + b + c - 1;
    std::vector<Edge> es;
    int next = 2;  // hubs are 0 and 1
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int t = 0; t < len - 1; ++t) {
            es.emplace_back(std::min(prev, next), std::max(prev, next));
            prev = next++;
        }
        es.emplace_back(std::min(prev, 1), std::max(prev, 1));
    }
    return Graph(n, es);
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 encoder limited to n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) {
        acc <<= (6 - nbits);
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

Graph graph6_decode(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty string (byte 0)");
    const unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 < 63 || c0 > 63 + 62) {
        throw std::invalid_argument("graph6: invalid order byte (byte 0)");
    }
    const int n = c0 - 63;
    const int need = n * (n - 1) / 2;
    const int bytes = (need + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + bytes) {
        throw std::invalid_argument("graph6: expected " + std::to_string(1 + bytes) +
                                    " bytes, got " + std::to_string(text.size()) +
                                    " (byte " + std::to_string(text.size()) + ")");
    }
    std::vector<Edge> es;
    int pos = 0;
    for (int t = 0; t < bytes; ++t) {
        const unsigned char c = static_cast<unsigned char>(text[1 + t]);
        if (c < 63 || c > 126) {
            throw std::invalid_argument("graph6: byte out of range (byte " + std::to_string(1 + t) + ")");
        }
        const int v6 = c - 63;
        for (int bit = 5; bit >= 0; --bit, ++pos) {
            if (pos >= need) {
                if ((v6 >> bit) & 1) {
                    throw std::invalid_argument("graph6: nonzero padding (byte " + std::to_string(1 + t) + ")");
                }
                continue;
            }
            if ((v6 >> bit) & 1) {
                // invert pos -> (row, col) in column-major upper triangle
                int col = 1;
                int p = pos;
                while (p >= col) {
                    p -= col;
                    ++col;
                }
                es.emplace_back(p, col);
            }
        }
    }
    return Graph(n, es);
}

}  // namespace qmin
