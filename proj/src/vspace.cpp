#include "skelgraph/vspace.hpp"

#include <cstdint>

#include "skelgraph/errors.hpp"

namespace skelgraph {

namespace {

// Desk-scale guard: everything downstream is exhaustive over the 2^n
// skeleton classes and the q^n vectors.
constexpr std::int64_t kMaxSpaceSize = 1 << 14;

void check_space(int q, int n) {
    if (!Field::supported(q)) throw UnsupportedCardinality(q);
    if (n < 1) throw Error("dimension must be at least 1");
    if (n > 20) throw CapExceeded("dimension " + std::to_string(n) + " too large");
    std::int64_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= q;
        if (size > kMaxSpaceSize)
            throw CapExceeded("q^n exceeds " + std::to_string(kMaxSpaceSize) +
                              " (q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")");
    }
}

} // namespace

std::string vector_label(const Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

IndexSet skeleton(const Vec& v) {
    IndexSet s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.add(int(i) + 1);
    return s;
}

std::vector<Vec> enumerate_vectors(int q, int n, bool include_zero) {
    check_space(q, n);
    std::vector<Vec> out;
    Vec cur(n, 0);
    while (true) {
        if (include_zero || skeleton(cur).bits != 0) out.push_back(cur);
        // Odometer with the last coordinate fastest = lexicographic order.
        int i = n - 1;
        while (i >= 0 && cur[i] == q - 1) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

std::map<IndexSet, std::vector<Vec>> partition_classes(int q, int n) {
    check_space(q, n);
    std::map<IndexSet, std::vector<Vec>> classes;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        classes[IndexSet{mask}];
    for (auto& v : enumerate_vectors(q, n, true))
        classes[skeleton(v)].push_back(std::move(v));
    return classes;
}

namespace {

Graph build_component_graph(int q, int n, bool union_form) {
    check_space(q, n);
    auto vectors = enumerate_vectors(q, n, false);
    std::vector<std::string> labels;
    std::vector<std::uint32_t> masks;
    labels.reserve(vectors.size());
    masks.reserve(vectors.size());
    for (const auto& v : vectors) {
        labels.push_back(vector_label(v));
        masks.push_back(skeleton(v).bits);
    }
    const std::uint32_t full = IndexSet::full(n).bits;
    Graph g(std::move(labels));
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            bool edge = union_form ? (masks[a] | masks[b]) == full
                                   : (masks[a] & masks[b]) != 0;
            if (edge) g.add_edge(a, b);
        }
    return g;
}

} // namespace

Graph build_ig(int q, int n) { return build_component_graph(q, n, false); }
Graph build_ug(int q, int n) { return build_component_graph(q, n, true); }

} // namespace skelgraph
