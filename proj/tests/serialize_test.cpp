#include <doctest.h>

#include "skelgraph/props.hpp"
#include "skelgraph/serialize.hpp"
#include "skelgraph/vspace.hpp"

using namespace skelgraph;

TEST_CASE("graph JSON is canonical, sorted bytes") {
    CHECK(canonical_bytes(graph_to_json(build_ig(2, 2))) ==
          "{\"vertices\":[\"0,1\",\"1,0\",\"1,1\"],\"edges\":[[0,2],[1,2]]}\n");
    // Construction order does not leak into the output.
    Graph a(std::vector<std::string>{"b", "a"});
    a.add_edge(0, 1);
    Graph b(std::vector<std::string>{"a", "b"});
    b.add_edge(1, 0);
    CHECK(canonical_bytes(graph_to_json(a)) == canonical_bytes(graph_to_json(b)));
    CHECK(canonical_bytes(graph_to_json(a)) == "{\"vertices\":[\"a\",\"b\"],\"edges\":[[0,1]]}\n");
}

TEST_CASE("poset JSON golden bytes for the q=2, n=2 lattice") {
    CHECK(canonical_bytes(poset_to_json(build_l_lattice(2, 2).poset())) ==
          "{\"elements\":[\"0\",\"0,1\",\"1\",\"1,0\"],"
          "\"leq\":[[0,0],[0,1],[0,2],[0,3],[1,1],[1,2],[2,2],[3,2],[3,3]]}\n");
}

TEST_CASE("graph JSON round-trips") {
    for (auto [q, n] : {std::pair(3, 2), std::pair(2, 3)}) {
        Graph g = build_ug(q, n);
        Graph back = graph_from_json(graph_to_json(g));
        CHECK(graphs_equal_labeled(g, back).equal);
    }
}

TEST_CASE("poset JSON round-trips and the parse validates axioms") {
    Poset p = build_l_lattice(3, 2).poset();
    Poset back = poset_from_json(poset_to_json(p));
    CHECK(back.size() == p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            CHECK(p.leq(a, b) ==
                  back.leq(back.index_of(p.label(a)), back.index_of(p.label(b))));

    auto bad = nlohmann::json::parse(R"({"elements":["a","b","c"],"leq":[[0,1],[1,2]]})");
    CHECK_THROWS_AS(poset_from_json(bad), OrderError);  // missing transitive pair
    auto malformed = nlohmann::json::parse(R"({"elements":["a"],"leq":[[0,7]]})");
    CHECK_THROWS_AS(poset_from_json(malformed), Error);
    auto not_graph = nlohmann::json::parse(R"({"nodes":[]})");
    CHECK_THROWS_AS(graph_from_json(not_graph), Error);
}

TEST_CASE("DOT output") {
    CHECK(graph_to_dot(build_ig(2, 2), "ig") ==
          "graph \"ig\" {\n"
          "  \"0,1\";\n"
          "  \"1,0\";\n"
          "  \"1,1\";\n"
          "  \"0,1\" -- \"1,1\";\n"
          "  \"1,0\" -- \"1,1\";\n"
          "}\n");
    std::string dot = poset_to_dot(build_l_lattice(2, 2).poset(), "L");
    CHECK(dot.find("digraph \"L\"") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"0,1\";") != std::string::npos);
    CHECK(dot.find("\"0,1\" -> \"1\";") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"1\";") == std::string::npos);  // covers only
}
