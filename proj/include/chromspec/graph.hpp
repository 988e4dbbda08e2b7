#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromspec {

/// Simple undirected graph on vertices 0..n-1, stored as adjacency bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n)
        : n_(n < 0 ? throw std::invalid_argument("graph order must be non-negative") : n),
          words_((static_cast<std::size_t>(n) + 63) / 64),
          bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int order() const { return n_; }
    std::size_t size() const { return m_; }

    bool adjacent(int u, int v) const {
        return (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
    }

    /// Adds the edge uv; loops are rejected, repeated edges are ignored.
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
        if (adjacent(u, v)) return;
        set(u, v);
        set(v, u);
        ++m_;
    }

    int degree(int v) const {
        int d = 0;
        const std::uint64_t* r = row(v);
        for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    std::vector<int> neighbours(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adjacent(v, u)) out.push_back(u);
        return out;
    }

    /// Row v as a 64-bit mask. Only meaningful when order() <= 64.
    std::uint64_t row_mask(int v) const { return words_ == 0 ? 0 : row(v)[0]; }

    bool connected() const {
        if (n_ <= 1) return true;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n_; ++u) {
                if (!seen[static_cast<std::size_t>(u)] && adjacent(v, u)) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        return reached == n_;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    void set(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
            std::uint64_t{1} << (v % 64);
    }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::size_t m_ = 0;
};

/// The order n, chromatic target chi and the first part (K_a u O_a0) of
/// G(a,a0) = (K_a u O_a0) v (K_b u O_b0).
struct ExtremalParams {
    int n = 0;
    int chi = 0;
    int a = 0;
    int a0 = 0;

    int b() const { return chi - a; }
    int b0() const { return n - chi - a0; }

    /// Empty when feasible, otherwise names the violated constraint.
    std::string infeasibility() const {
        if (chi < 3) return "chi >= 3 violated";
        if (chi > n - 1) return "chi <= n - 1 violated";
        if (a < 1) return "a >= 1 violated";
        if (a > chi - 1) return "a <= chi - 1 violated";
        if (a0 < 0) return "a0 >= 0 violated";
        if (b0() < 0) return "b0 = n - chi - a0 >= 0 violated";
        return {};
    }
    bool feasible() const { return infeasibility().empty(); }

    friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

class InfeasibleParams : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline Graph complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(int k) { return Graph(k); }

inline Graph cycle(int k) {
    Graph g(k);
    for (int v = 0; v < k && k >= 3; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

namespace detail {
inline void copy_edges(Graph& dst, const Graph& src, int offset) {
    for (int u = 0; u < src.order(); ++u)
        for (int v = u + 1; v < src.order(); ++v)
            if (src.adjacent(u, v)) dst.add_edge(u + offset, v + offset);
}
}  // namespace detail

/// h's vertices are relabelled by offset g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    detail::copy_edges(out, g, 0);
    detail::copy_edges(out, h, g.order());
    return out;
}

inline Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

inline Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

inline Graph extremal_graph(const ExtremalParams& p) {
    if (auto why = p.infeasibility(); !why.empty())
        throw InfeasibleParams("infeasible G(a,a0) parameters: " + why);
    return join(disjoint_union(complete(p.a), empty_graph(p.a0)),
                disjoint_union(complete(p.b()), empty_graph(p.b0())));
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace chromspec
