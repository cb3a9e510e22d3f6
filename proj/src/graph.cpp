#include "skelgraph/graph.hpp"

#include <algorithm>

#include "skelgraph/errors.hpp"

namespace skelgraph {

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    adj_.assign(labels_.size(), Bitset(int(labels_.size())));
    index_.reserve(labels_.size());
    for (int i = 0; i < int(labels_.size()); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw Error("duplicate vertex label '" + labels_[i] + "'");
    }
}

std::optional<int> Graph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw Error("loop edge at vertex '" + labels_[u] + "'");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++edges_;
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < order(); ++u)
        for (int v = adj_[u].find_next(u); v >= 0; v = adj_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const int> verts) const {
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (int v : verts) labels.push_back(labels_[v]);
    Graph g(std::move(labels));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) g.add_edge(int(i), int(j));
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.labels());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph join(const Graph& g, const Graph& h,
           std::vector<std::pair<std::string, std::string>>* renamed) {
    std::vector<std::string> labels = g.labels();
    for (const auto& l : h.labels()) {
        std::string name = l;
        while (std::find(labels.begin(), labels.end(), name) != labels.end())
            name += '\'';
        if (name != l && renamed) renamed->emplace_back(l, name);
        labels.push_back(name);
    }
    Graph j(std::move(labels));
    const int gn = g.order();
    for (auto [u, v] : g.edge_pairs()) j.add_edge(u, v);
    for (auto [u, v] : h.edge_pairs()) j.add_edge(gn + u, gn + v);
    for (int u = 0; u < gn; ++u)
        for (int v = 0; v < h.order(); ++v)
            j.add_edge(u, gn + v);
    return j;
}

Graph complete_graph(const std::vector<std::string>& labels) {
    Graph g(labels);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            g.add_edge(u, v);
    return g;
}

Graph edgeless_graph(const std::vector<std::string>& labels) {
    return Graph(labels);
}

} // namespace skelgraph
