#include <doctest.h>

#include "skelgraph/props.hpp"
#include "skelgraph/serialize.hpp"
#include "skelgraph/verify.hpp"
#include "skelgraph/vspace.hpp"

using namespace skelgraph;

TEST_CASE("the check registry") {
    CHECK(check_ids().size() == 11);
    CHECK(is_check_id("igv"));
    CHECK(is_check_id("weakly-perfect"));
    CHECK(!is_check_id("nope"));
    CHECK(!check_uses_grid("chain-replace"));
    CHECK(check_uses_grid("igv"));
}

TEST_CASE("every check passes on a couple of grid points") {
    for (const auto& id : check_ids()) {
        for (auto [q, n] : {std::pair(2, 2), std::pair(3, 2), std::pair(2, 1)}) {
            CAPTURE(id);
            CAPTURE(q);
            CAPTURE(n);
            auto r = run_check(id, q, n);
            CHECK(r.status == CheckStatus::pass);
            if (!check_uses_grid(id)) break;
        }
    }
}

TEST_CASE("unknown ids and bad parameters surface as errors") {
    CHECK_THROWS_AS(run_check("bogus", 2, 2), Error);
    CHECK_THROWS_AS(run_check("igv", 6, 2), UnsupportedCardinality);
}

TEST_CASE("cap overruns come back as SKIPPED, not as silent passes") {
    CheckOptions tiny;
    tiny.color_cap = 4;
    auto r = run_check("weakly-perfect", 3, 2, tiny);
    CHECK(r.status == CheckStatus::skipped);
    CHECK(r.detail.find("cap") != std::string::npos);
}

TEST_CASE("an injected fault fails with a machine-checkable witness") {
    // Corrupt one edge of the component graph and compare against the real
    // one; the discrepancy must name an actual differing edge.
    Graph good = build_ig(2, 2);
    Graph bad(good.labels());
    auto edges = good.edge_pairs();
    for (std::size_t i = 1; i < edges.size(); ++i) bad.add_edge(edges[i].first, edges[i].second);
    auto diff = graphs_equal_labeled(good, bad);
    REQUIRE(!diff.equal);
    const auto [u, v] = edges[0];
    const std::string expect =
        "edge {" + std::min(good.label(u), good.label(v)) + "," +
        std::max(good.label(u), good.label(v)) + "} only in first graph";
    CHECK(diff.discrepancy == expect);
    // And the witness re-validates: that edge really is in one and not the
    // other.
    CHECK(good.adjacent(u, v));
    CHECK(!bad.adjacent(u, v));
}

TEST_CASE("certificate validators") {
    Graph c5(std::vector<std::string>{"a", "b", "c", "d", "e"});
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK(is_induced_cycle(c5, {0, 1, 2, 3, 4}, false, true));
    CHECK(!is_induced_cycle(c5, {0, 1, 2, 3}, false, true));   // even / short
    CHECK(!is_induced_cycle(c5, {0, 1, 2, 4, 3}, false, true));  // wrong order
    CHECK(is_induced_cycle(complement(c5), {0, 1, 2, 3, 4}, true, true));

    Graph k3 = complete_graph({"x", "y", "z"});
    CHECK(is_perfect_elimination_order(k3, {0, 1, 2}));
    CHECK(!is_perfect_elimination_order(k3, {0, 1}));
    Graph c4(std::vector<std::string>{"a", "b", "c", "d"});
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    CHECK(!is_perfect_elimination_order(c4, {0, 1, 2, 3}));
}

TEST_CASE("sweep runs the whole registry once per grid point") {
    SweepConfig config;
    config.qs = {2};
    config.ns = {1, 2};
    auto results = run_sweep(config);
    CHECK(results.size() == 10 * 2 + 1);
    int fails = 0;
    for (const auto& r : results) fails += r.status == CheckStatus::fail;
    CHECK(fails == 0);

    auto table = report_table(results);
    CHECK(table.find("igv") != std::string::npos);
    CHECK(table.find("0 failed") != std::string::npos);

    auto j = report_json(config, results);
    CHECK(j["failures"] == 0);
    CHECK(j["checks"].size() == results.size());
    // Byte-stable across reruns.
    CHECK(canonical_bytes(j) == canonical_bytes(report_json(config, run_sweep(config))));

    SweepConfig empty;
    empty.qs = {};
    CHECK(run_sweep(empty).empty());
}
