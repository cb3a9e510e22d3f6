#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "skelgraph/props.hpp"
#include "skelgraph/quotient.hpp"
#include "skelgraph/vspace.hpp"
#include "skelgraph/zdg.hpp"

using namespace skelgraph;

namespace {

Graph cycle_graph(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    Graph g(std::move(labels));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::string> labels;
    for (int i = 0; i < a; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 0; i < b; ++i) labels.push_back("b" + std::to_string(i));
    Graph g(std::move(labels));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Relabel a graph through a label map (identity where unmapped).
Graph relabel(const Graph& g, const std::map<std::string, std::string>& m) {
    std::vector<std::string> labels;
    for (const auto& l : g.labels()) {
        auto it = m.find(l);
        labels.push_back(it == m.end() ? l : it->second);
    }
    Graph out(std::move(labels));
    for (auto [u, v] : g.edge_pairs()) out.add_edge(u, v);
    return out;
}

} // namespace

TEST_CASE("twin reduction") {
    SUBCASE("complete graphs collapse to a point") {
        auto q = reduce(complete_graph({"a", "b", "c", "d"}));
        CHECK(q.graph.order() == 1);
        CHECK(q.graph.label(0) == "a");  // least member label
        CHECK(q.classes[0].size() == 4);
    }
    SUBCASE("the 4-cycle is rigid") {
        auto q = reduce(cycle_graph(4));
        CHECK(q.graph.order() == 4);
        CHECK(q.graph.edge_count() == 4);
    }
    SUBCASE("reduced component graph at q=3, n=2 is the 3-vertex path") {
        auto q = reduce(build_ig(3, 2));
        REQUIRE(q.graph.order() == 3);
        CHECK(q.graph.edge_count() == 2);
        Graph target = join(complement(ring_zdg(2, 2)), complete_graph({"1,1"}));
        CHECK(are_isomorphic(q.graph, target).isomorphic);
    }
    SUBCASE("quotient maps are surjective and size-monotone") {
        std::mt19937 rng(99);
        for (int t = 0; t < 25; ++t) {
            Graph g = oracle::random_graph(rng, 9);
            auto q = reduce(g);
            CHECK(q.graph.order() <= g.order());
            std::size_t covered = 0;
            for (const auto& members : q.classes) covered += members.size();
            CHECK(covered == std::size_t(g.order()));
            for (int v = 0; v < g.order(); ++v) CHECK(q.class_of[v] >= 0);
        }
    }
}

TEST_CASE("neighborhood quotient") {
    SUBCASE("complete bipartite collapses to an edge") {
        auto q = neighborhood_quotient(complete_bipartite(2, 3));
        CHECK(q.graph.order() == 2);
        CHECK(q.graph.edge_count() == 1);
    }
    SUBCASE("edgeless graphs collapse to a single class") {
        auto q = neighborhood_quotient(edgeless_graph({"x", "y", "z"}));
        CHECK(q.graph.order() == 1);
        CHECK(q.graph.edge_count() == 0);
    }
    SUBCASE("union graph quotient at q=3, n=2 is the Boolean-ring join form") {
        auto q = neighborhood_quotient(build_ug(3, 2));
        Graph target = join(ring_zdg(2, 2), complete_graph({"u1", "u2", "u3", "u4"}));
        CHECK(q.graph.order() == 6);
        CHECK(are_isomorphic(q.graph, target).isomorphic);
    }
    SUBCASE("related vertices are never adjacent") {
        std::mt19937 rng(123);
        for (int t = 0; t < 25; ++t) {
            Graph g = oracle::random_graph(rng, 9);
            auto q = neighborhood_quotient(g);
            for (const auto& members : q.classes)
                for (std::size_t i = 0; i < members.size(); ++i)
                    for (std::size_t j = i + 1; j < members.size(); ++j)
                        CHECK(!g.adjacent(members[i], members[j]));
        }
    }
}

TEST_CASE("quotients of zero-divisor graphs match the compressed poset") {
    // Complement side: reducing the complement gives the complement over
    // the compression, with classes named by their least member.
    for (auto [q, n] : {std::pair(2, 3), std::pair(3, 2), std::pair(3, 3)}) {
        CAPTURE(q);
        CAPTURE(n);
        Poset p = build_l_lattice(q, n).poset();
        auto cp = compress(p);

        std::map<std::string, std::string> class_to_least;
        for (std::size_t c = 1; c < cp.members.size(); ++c) {
            std::string least = p.label(cp.members[c][0]);
            for (int x : cp.members[c]) least = std::min(least, p.label(x));
            class_to_least[cp.quotient.label(int(c))] = least;
        }

        auto lhs_red = reduce(complement(zdg_poset(p).graph)).graph;
        auto rhs_red = relabel(complement(zdg_poset(cp.quotient).graph), class_to_least);
        CHECK(graphs_equal_labeled(lhs_red, rhs_red).equal);

        // Neighborhood side, on the lattice and on its dual.
        auto lhs_nq = neighborhood_quotient(zdg_poset(p).graph).graph;
        auto rhs_nq = relabel(zdg_poset(cp.quotient).graph, class_to_least);
        CHECK(graphs_equal_labeled(lhs_nq, rhs_nq).equal);

        Poset dp = build_l_lattice(q, n).dual().poset();
        auto dcp = compress(dp);
        std::map<std::string, std::string> dual_to_least;
        for (std::size_t c = 1; c < dcp.members.size(); ++c) {
            std::string least = dp.label(dcp.members[c][0]);
            for (int x : dcp.members[c]) least = std::min(least, dp.label(x));
            dual_to_least[dcp.quotient.label(int(c))] = least;
        }
        CHECK(graphs_equal_labeled(
                  neighborhood_quotient(zdg_poset(dp).graph).graph,
                  relabel(zdg_poset(dcp.quotient).graph, dual_to_least))
                  .equal);
    }
}
