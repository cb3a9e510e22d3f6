#include "skelgraph/serialize.hpp"

#include <algorithm>
#include <numeric>

#include "skelgraph/errors.hpp"

namespace skelgraph {

namespace {

// Permutation sorting labels, and its inverse (original index -> rank).
std::pair<std::vector<int>, std::vector<int>> label_order(const std::vector<std::string>& labels) {
    std::vector<int> by_label(labels.size());
    std::iota(by_label.begin(), by_label.end(), 0);
    std::sort(by_label.begin(), by_label.end(),
              [&](int a, int b) { return labels[a] < labels[b]; });
    std::vector<int> rank(labels.size());
    for (int i = 0; i < int(by_label.size()); ++i) rank[by_label[i]] = i;
    return {by_label, rank};
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

nlohmann::ordered_json graph_to_json(const Graph& g) {
    auto [by_label, rank] = label_order(g.labels());
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::json::array();
    for (int v : by_label) j["vertices"].push_back(g.label(v));
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edge_pairs())
        edges.emplace_back(std::min(rank[u], rank[v]), std::max(rank[u], rank[v]));
    std::sort(edges.begin(), edges.end());
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : edges) j["edges"].push_back({a, b});
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw Error("graph JSON must contain 'vertices' and 'edges'");
    Graph g(j.at("vertices").get<std::vector<std::string>>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error("malformed edge entry");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
            throw Error("edge index out of range");
        g.add_edge(u, v);
    }
    return g;
}

nlohmann::ordered_json poset_to_json(const Poset& p) {
    auto [by_label, rank] = label_order(p.labels());
    nlohmann::ordered_json j;
    j["elements"] = nlohmann::json::array();
    for (int v : by_label) j["elements"].push_back(p.label(v));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b)) pairs.emplace_back(rank[a], rank[b]);
    std::sort(pairs.begin(), pairs.end());
    j["leq"] = nlohmann::json::array();
    for (auto [a, b] : pairs) j["leq"].push_back({a, b});
    return j;
}

Poset poset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
        throw Error("poset JSON must contain 'elements' and 'leq'");
    auto labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("leq")) {
        if (!e.is_array() || e.size() != 2) throw Error("malformed leq entry");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || b < 0 || a >= int(labels.size()) || b >= int(labels.size()))
            throw Error("leq index out of range");
        pairs.emplace_back(a, b);
    }
    return Poset(std::move(labels), pairs);
}

std::string canonical_bytes(const nlohmann::ordered_json& j) { return j.dump() + "\n"; }

std::string graph_to_dot(const Graph& g, const std::string& name) {
    auto [by_label, rank] = label_order(g.labels());
    std::string out = "graph " + dot_quote(name) + " {\n";
    for (int v : by_label) out += "  " + dot_quote(g.label(v)) + ";\n";
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edge_pairs()) {
        auto a = g.label(u), b = g.label(v);
        if (b < a) std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(edges.begin(), edges.end());
    for (auto& [a, b] : edges) out += "  " + dot_quote(a) + " -- " + dot_quote(b) + ";\n";
    out += "}\n";
    return out;
}

std::string poset_to_dot(const Poset& p, const std::string& name) {
    std::string out = "digraph " + dot_quote(name) + " {\n  rankdir=BT;\n";
    auto [by_label, rank] = label_order(p.labels());
    for (int v : by_label) out += "  " + dot_quote(p.label(v)) + ";\n";
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [a, b] : p.cover_pairs()) covers.emplace_back(p.label(a), p.label(b));
    std::sort(covers.begin(), covers.end());
    for (auto& [a, b] : covers) out += "  " + dot_quote(a) + " -> " + dot_quote(b) + ";\n";
    out += "}\n";
    return out;
}

} // namespace skelgraph
