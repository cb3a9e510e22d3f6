#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skelgraph/bitset.hpp"

namespace skelgraph {

/// Finite simple undirected graph with stable string labels.
/// Adjacency is kept as bitset rows; labels are unique within a graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> labels);

    int order() const { return int(labels_.size()); }
    std::size_t edge_count() const { return edges_; }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(std::string_view label) const;

    void add_edge(int u, int v);  // u != v; adding twice is a no-op
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    /// Edges as index pairs (i < j), in row order.
    std::vector<std::pair<int, int>> edge_pairs() const;

    /// Induced subgraph on the given vertices, labels preserved.
    Graph induced(std::span<const int> verts) const;

private:
    std::vector<std::string> labels_;
    std::vector<Bitset> adj_;
    std::unordered_map<std::string, int> index_;
    std::size_t edges_ = 0;
};

Graph complement(const Graph& g);

/// Disjoint union plus all cross edges. Labels colliding with g's are
/// suffixed with ' until distinct; any renames are appended to *renamed.
Graph join(const Graph& g, const Graph& h,
           std::vector<std::pair<std::string, std::string>>* renamed = nullptr);

Graph complete_graph(const std::vector<std::string>& labels);
Graph edgeless_graph(const std::vector<std::string>& labels);

} // namespace skelgraph
