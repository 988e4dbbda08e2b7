#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chromspec/graph.hpp"

namespace chromspec {

inline constexpr int kExactSolverCap = 64;

/// chi is exact; witness[v] is the colour of v in 1..chi.
struct ColoringResult {
    int chi = 0;
    std::vector<int> witness;
};

class SolverCapError : public std::length_error {
public:
    explicit SolverCapError(int n)
        : std::length_error("exact solver cap exceeded: n = " + std::to_string(n) + " > " +
                            std::to_string(kExactSolverCap)) {}
};

inline bool is_proper(const Graph& g, const std::vector<int>& colour) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) && colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)])
                return false;
    return true;
}

namespace detail {

using Mask = std::uint64_t;

/// Induced subgraph on a vertex subset, as 64-bit rows.
struct MaskGraph {
    int n = 0;
    std::vector<Mask> rows;
    std::vector<int> original;  // local index -> graph vertex
};

inline std::vector<MaskGraph> components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<MaskGraph> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> members;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (Mask r = g.row_mask(v); r; r &= r - 1) {
                int u = std::countr_zero(r);
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        MaskGraph mg;
        mg.n = static_cast<int>(members.size());
        mg.original = members;
        mg.rows.assign(members.size(), 0);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j)
                if (g.adjacent(members[i], members[j])) mg.rows[i] |= Mask{1} << j;
        out.push_back(std::move(mg));
    }
    return out;
}

inline int greedy_clique(const MaskGraph& g) {
    int best = g.n > 0 ? 1 : 0;
    for (int start = 0; start < g.n; ++start) {
        Mask candidates = g.rows[static_cast<std::size_t>(start)];
        int size = 1;
        while (candidates) {
            int pick = -1;
            int pick_deg = -1;
            for (Mask c = candidates; c; c &= c - 1) {
                int v = std::countr_zero(c);
                int d = std::popcount(g.rows[static_cast<std::size_t>(v)] & candidates);
                if (d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            ++size;
            candidates &= g.rows[static_cast<std::size_t>(pick)];
        }
        best = std::max(best, size);
    }
    return best;
}

/// DSATUR search for a proper colouring with at most k colours (0-based).
class DsaturSearch {
public:
    DsaturSearch(const MaskGraph& g, int k)
        : g_(g), k_(k), colour_(static_cast<std::size_t>(g.n), -1),
          seen_(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(k), 0),
          forbidden_(static_cast<std::size_t>(g.n), 0) {}

    bool run() { return extend(0, 0); }
    const std::vector<int>& colouring() const { return colour_; }

private:
    int pick_vertex() const {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < g_.n; ++v) {
            if (colour_[static_cast<std::size_t>(v)] >= 0) continue;
            const int sat = std::popcount(forbidden_[static_cast<std::size_t>(v)]);
            int deg = 0;
            for (Mask r = g_.rows[static_cast<std::size_t>(v)]; r; r &= r - 1)
                if (colour_[static_cast<std::size_t>(std::countr_zero(r))] < 0) ++deg;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void paint(int v, int c, int delta) {
        for (Mask r = g_.rows[static_cast<std::size_t>(v)]; r; r &= r - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(r));
            int& cnt = seen_[u * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
            cnt += delta;
            if (cnt == 0)
                forbidden_[u] &= ~(Mask{1} << c);
            else
                forbidden_[u] |= Mask{1} << c;
        }
    }

    bool extend(int coloured, int used) {
        if (coloured == g_.n) return true;
        const int v = pick_vertex();
        if (std::popcount(forbidden_[static_cast<std::size_t>(v)]) >= k_) return false;
        // A fresh colour is only tried once, as colour index `used`.
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if ((forbidden_[static_cast<std::size_t>(v)] >> c) & 1) continue;
            colour_[static_cast<std::size_t>(v)] = c;
            paint(v, c, +1);
            if (extend(coloured + 1, std::max(used, c + 1))) return true;
            paint(v, c, -1);
            colour_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const MaskGraph& g_;
    int k_;
    std::vector<int> colour_;
    std::vector<int> seen_;
    std::vector<Mask> forbidden_;
};

/// Greedy DSATUR colouring; upper bound for the exact search.
inline std::vector<int> dsatur_greedy(const MaskGraph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.n), -1);
    std::vector<Mask> forbidden(static_cast<std::size_t>(g.n), 0);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (colour[static_cast<std::size_t>(v)] >= 0) continue;
            const int sat = std::popcount(forbidden[static_cast<std::size_t>(v)]);
            const int deg = std::popcount(g.rows[static_cast<std::size_t>(v)]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        const int c = std::countr_zero(~forbidden[static_cast<std::size_t>(best)]);
        colour[static_cast<std::size_t>(best)] = c;
        for (Mask r = g.rows[static_cast<std::size_t>(best)]; r; r &= r - 1)
            forbidden[static_cast<std::size_t>(std::countr_zero(r))] |= Mask{1} << c;
    }
    return colour;
}

inline ColoringResult colour_component(const MaskGraph& g) {
    std::vector<int> best = dsatur_greedy(g);
    const int ub = *std::max_element(best.begin(), best.end()) + 1;
    const int lb = greedy_clique(g);
    int chi = ub;
    for (int k = lb; k < ub; ++k) {
        DsaturSearch search(g, k);
        if (search.run()) {
            best = search.colouring();
            chi = k;
            break;
        }
    }
    for (int& c : best) ++c;
    return {chi, std::move(best)};
}

}  // namespace detail

/// Exact chromatic number with a proper witness colouring.
inline ColoringResult chromatic_number(const Graph& g) {
    if (g.order() < 1) throw std::domain_error("chromatic number requires n >= 1");
    if (g.order() > kExactSolverCap) throw SolverCapError(g.order());
    ColoringResult out;
    out.witness.assign(static_cast<std::size_t>(g.order()), 0);
    for (const auto& comp : detail::components(g)) {
        auto part = detail::colour_component(comp);
        out.chi = std::max(out.chi, part.chi);
        for (std::size_t i = 0; i < comp.original.size(); ++i)
            out.witness[static_cast<std::size_t>(comp.original[i])] = part.witness[i];
    }
    return out;
}

/// Degeneracy + 1, by repeatedly removing a vertex of minimum remaining
/// degree (lowest index on ties).
inline int coloring_number(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::domain_error("coloring number requires n >= 1");
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int degeneracy = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
                pick = v;
        degeneracy = std::max(degeneracy, deg[static_cast<std::size_t>(pick)]);
        removed[static_cast<std::size_t>(pick)] = 1;
        for (int u = 0; u < n; ++u)
            if (!removed[static_cast<std::size_t>(u)] && g.adjacent(pick, u)) --deg[static_cast<std::size_t>(u)];
    }
    return degeneracy + 1;
}

}  // namespace chromspec
