#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skelgraph/graph.hpp"

namespace skelgraph {

bool is_connected(const Graph& g);

/// Largest BFS eccentricity; nullopt when disconnected, 0 for graphs with
/// at most one vertex.
std::optional<int> diameter(const Graph& g);

/// Chordality with a certificate either way: a perfect elimination
/// ordering (first vertex eliminated first) from maximum cardinality
/// search, or a chordless cycle of length >= 4 as a vertex sequence.
struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order;
    std::vector<int> chordless_cycle;
};
ChordalityResult is_chordal(const Graph& g);

/// One vertex per class of mutual twins (open or closed), found by
/// repeatedly deleting a vertex whose punctured neighborhood matches
/// another's. Deleting a twin preserves the existence of induced odd
/// cycles in the graph and in its complement, so perfection checks run on
/// the reduced graph.
std::vector<int> twin_representatives(const Graph& g);

/// An induced odd cycle of length >= 5, or nullopt. Pruned enumeration of
/// induced paths anchored at the cycle's minimum vertex.
std::optional<std::vector<int>> find_odd_hole(const Graph& g);

/// Perfection in the strong-perfect-graph form: no odd hole in the graph
/// or its complement. The search runs on the twin-reduced graph; cap
/// bounds the reduced size and CapExceeded is thrown above it. The
/// certificate lists original vertices; in_complement marks an antihole.
struct PerfectionResult {
    bool perfect = false;
    std::vector<int> odd_hole;
    bool in_complement = false;
};
PerfectionResult is_perfect(const Graph& g, int reduced_cap = 64);

/// Exact clique number by branch and bound with greedy-coloring bounds.
int clique_number(const Graph& g, int cap = 64, std::vector<int>* witness = nullptr);

/// Exact chromatic number: clique lower bound, saturation-greedy upper
/// bound, and a saturation-driven exact search between them. Ties break
/// by highest saturation then lowest index.
int chromatic_number(const Graph& g, int cap = 64, std::vector<int>* coloring = nullptr);

bool is_weakly_perfect(const Graph& g, int cap = 64);

/// Isomorphism by backtracking over color classes of iterated
/// degree/neighborhood refinement. mapping[u of g] = vertex of h.
struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping;
};
IsoResult are_isomorphic(const Graph& g, const Graph& h, int cap = 256);

/// Identical label sets and identical edges as label pairs; reports the
/// first discrepancy found.
struct LabeledDiff {
    bool equal = false;
    std::string discrepancy;
};
LabeledDiff graphs_equal_labeled(const Graph& g, const Graph& h);

} // namespace skelgraph
