#include "skelgraph/quotient.hpp"

#include <algorithm>

#include "skelgraph/errors.hpp"

namespace skelgraph {

namespace {

// Build the quotient from a symmetric "related" matrix whose transitive
// reflexive structure has already been verified.
GraphQuotient quotient_by(const Graph& g, const std::vector<Bitset>& related) {
    const int m = g.order();
    GraphQuotient out;
    out.class_of.assign(m, -1);
    for (int v = 0; v < m; ++v) {
        if (out.class_of[v] >= 0) continue;
        const int c = int(out.classes.size());
        std::vector<int> members;
        for (int u = related[v].find_first(); u >= 0; u = related[v].find_next(u)) {
            out.class_of[u] = c;
            members.push_back(u);
        }
        out.classes.push_back(std::move(members));
    }

    std::vector<std::string> labels;
    for (const auto& members : out.classes) {
        std::string least = g.label(members[0]);
        for (int u : members) least = std::min(least, g.label(u));
        labels.push_back(std::move(least));
    }
    out.graph = Graph(std::move(labels));
    for (auto [u, v] : g.edge_pairs()) {
        int cu = out.class_of[u], cv = out.class_of[v];
        if (cu != cv) out.graph.add_edge(cu, cv);
    }
    return out;
}

} // namespace

GraphQuotient reduce(const Graph& g) {
    const int m = g.order();
    std::vector<Bitset> related(m, Bitset(m));
    for (int u = 0; u < m; ++u) {
        related[u].set(u);
        for (int v = u + 1; v < m; ++v) {
            if (!g.adjacent(u, v)) continue;
            Bitset nu = g.neighbors(u), nv = g.neighbors(v);
            nu.reset(v);
            nv.reset(u);
            if (nu == nv) {
                related[u].set(v);
                related[v].set(u);
            }
        }
    }
    // The relation is an equivalence on every simple graph, but that is a
    // property of the definition, not of this code path; verify it here.
    for (int u = 0; u < m; ++u)
        for (int v = related[u].find_first(); v >= 0; v = related[u].find_next(v))
            if (!related[v].is_subset_of(related[u]))
                throw Error("twin relation not transitive at '" + g.label(u) + "', '" +
                            g.label(v) + "'");
    return quotient_by(g, related);
}

GraphQuotient neighborhood_quotient(const Graph& g) {
    const int m = g.order();
    std::vector<Bitset> related(m, Bitset(m));
    for (int u = 0; u < m; ++u) {
        related[u].set(u);
        for (int v = u + 1; v < m; ++v)
            if (g.neighbors(u) == g.neighbors(v)) {
                related[u].set(v);
                related[v].set(u);
            }
    }
    return quotient_by(g, related);
}

} // namespace skelgraph
