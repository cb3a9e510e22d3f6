#pragma once

#include "skelgraph/graph.hpp"
#include "skelgraph/order.hpp"

namespace skelgraph {

/// Result of a zero-divisor-graph construction. `trivial` is set when
/// Z(P) has no nonzero element, in which case the graph is empty; sweeps
/// over degenerate instances handle this uniformly instead of erroring.
struct ZeroDivisorGraph {
    Graph graph;
    bool trivial = false;
};

/// Zero-divisor graph of a poset with 0: vertices Z(P) \ {0}, edges where
/// the pairwise lower cone is {0}.
ZeroDivisorGraph zdg_poset(const Poset& p);

/// Zero-divisor graph of the product ring F^n: vertices are the tuples
/// with at least one zero and one nonzero coordinate, edges where the
/// coordinatewise product is the zero tuple. Built directly from field
/// arithmetic, independent of the poset machinery.
Graph ring_zdg(int q, int n);

} // namespace skelgraph
