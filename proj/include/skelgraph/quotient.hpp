#pragma once

#include <vector>

#include "skelgraph/graph.hpp"

namespace skelgraph {

/// A graph quotient: the quotient graph, the vertex classes (original
/// indices), and the class of each original vertex. Class labels are the
/// lexicographically least member label.
struct GraphQuotient {
    Graph graph;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
};

/// Quotient by u ~ v iff u = v, or u-v is an edge with
/// N(u)\{v} = N(v)\{u}. The relation is checked for transitivity on the
/// instance before quotienting and an Error is raised if it fails.
GraphQuotient reduce(const Graph& g);

/// Quotient by equal open neighborhoods N(u) = N(v). Related vertices are
/// necessarily non-adjacent, so class adjacency is well defined.
GraphQuotient neighborhood_quotient(const Graph& g);

} // namespace skelgraph
