#include <catch2/catch_amalgamated.hpp>

#include "chromspec/chroma.hpp"
#include "chromspec/graph.hpp"

using namespace chromspec;

namespace {
std::vector<int> degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    return d;
}

bool symmetric_loopless(const Graph& g) {
    std::size_t pairs = 0;
    for (int u = 0; u < g.order(); ++u) {
        if (g.adjacent(u, u)) return false;
        for (int v = 0; v < g.order(); ++v) {
            if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
            if (u < v && g.adjacent(u, v)) ++pairs;
        }
    }
    return pairs == g.size();
}
}  // namespace

TEST_CASE("complete and empty graphs", "[graph]") {
    CHECK(complete(0).order() == 0);
    CHECK(complete(0).size() == 0);
    CHECK(complete(4).order() == 4);
    CHECK(complete(4).size() == 6);
    CHECK(empty_graph(5).size() == 0);
    CHECK(empty_graph(0).order() == 0);
    CHECK(symmetric_loopless(complete(7)));
}

TEST_CASE("disjoint union", "[graph]") {
    const Graph u = disjoint_union(complete(2), complete(2));
    CHECK(u.order() == 4);
    CHECK(u.size() == 2);
    CHECK(disjoint_union(petersen(), empty_graph(0)) == petersen());

    const Graph k3o2 = disjoint_union(complete(3), empty_graph(2));
    CHECK(k3o2.order() == 5);
    CHECK(k3o2.size() == 3);
    CHECK(degrees(k3o2) == std::vector<int>{2, 2, 2, 0, 0});
}

TEST_CASE("join", "[graph]") {
    const Graph k33 = join(empty_graph(3), empty_graph(3));
    CHECK(k33.order() == 6);
    CHECK(k33.size() == 9);
    CHECK(join(petersen(), empty_graph(0)) == petersen());
    CHECK(join(complete(2), complete(2)) == complete(4));
}

TEST_CASE("edge-count identities for union and join", "[graph][property]") {
    const std::vector<Graph> pool{empty_graph(0), empty_graph(3), complete(1), complete(4), cycle(5), petersen(),
                                  complete_bipartite(2, 3)};
    for (const auto& g : pool) {
        for (const auto& h : pool) {
            const Graph u = disjoint_union(g, h);
            const Graph j = join(g, h);
            CHECK(u.order() == g.order() + h.order());
            CHECK(u.size() == g.size() + h.size());
            CHECK(j.size() == g.size() + h.size() + static_cast<std::size_t>(g.order() * h.order()));
            CHECK(symmetric_loopless(j));
        }
    }
}

TEST_CASE("extremal graph construction", "[graph]") {
    const Graph g = extremal_graph({8, 4, 2, 2});
    CHECK(g.order() == 8);
    CHECK(g.size() == 18);

    const Graph h = extremal_graph({6, 3, 1, 0});
    CHECK(h.order() == 6);
    CHECK(h.size() == 6);

    CHECK(chromatic_number(g).chi == 4);
}

TEST_CASE("extremal graphs are connected, not complete, with the target order", "[graph][property]") {
    for (int n = 4; n <= 12; ++n)
        for (int chi = 3; chi <= n - 1; ++chi)
            for (int a = 1; a <= chi - 1; ++a)
                for (int a0 = 0; a0 <= n - chi; ++a0) {
                    const Graph g = extremal_graph({n, chi, a, a0});
                    CHECK(g.order() == n);
                    CHECK(g.connected());
                    CHECK(g.size() < static_cast<std::size_t>(n * (n - 1) / 2));
                }
}

TEST_CASE("infeasible extremal parameters name the violated constraint", "[graph][errors]") {
    CHECK_THROWS_WITH(extremal_graph({4, 4, 1, 0}), Catch::Matchers::ContainsSubstring("chi <= n - 1"));
    CHECK_THROWS_WITH(extremal_graph({8, 4, 0, 2}), Catch::Matchers::ContainsSubstring("a >= 1"));
    CHECK_THROWS_WITH(extremal_graph({8, 4, 4, 2}), Catch::Matchers::ContainsSubstring("a <= chi - 1"));
    CHECK_THROWS_WITH(extremal_graph({8, 4, 2, 5}), Catch::Matchers::ContainsSubstring("b0"));
    CHECK_THROWS_WITH(extremal_graph({8, 2, 1, 2}), Catch::Matchers::ContainsSubstring("chi >= 3"));
    CHECK_THROWS_AS(extremal_graph({8, 4, 2, -1}), InfeasibleParams);
}

TEST_CASE("graph rejects loops and out-of-range vertices", "[graph][errors]") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.size() == 1);
}
