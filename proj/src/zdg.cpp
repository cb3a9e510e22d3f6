#include "skelgraph/zdg.hpp"

#include "skelgraph/vspace.hpp"

namespace skelgraph {

ZeroDivisorGraph zdg_poset(const Poset& p) {
    const int z = p.require_zero();
    auto verts = zdg_vertex_set(p);

    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (int v : verts) labels.push_back(p.label(v));

    ZeroDivisorGraph out{Graph(std::move(labels)), verts.empty()};
    Bitset zero_only(p.size());
    zero_only.set(z);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if ((p.down(verts[i]) & p.down(verts[j])) == zero_only)
                out.graph.add_edge(int(i), int(j));
    return out;
}

Graph ring_zdg(int q, int n) {
    Field f = Field::make(q);
    auto vectors = enumerate_vectors(q, n, false);

    std::vector<Vec> divisors;
    std::vector<std::string> labels;
    for (auto& v : vectors) {
        bool has_zero = false;
        for (int c : v) has_zero |= (c == 0);
        if (!has_zero) continue;  // unit: every coordinate invertible
        labels.push_back(vector_label(v));
        divisors.push_back(std::move(v));
    }

    Graph g(std::move(labels));
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            bool zero_product = true;
            for (int i = 0; i < n && zero_product; ++i)
                zero_product = f.mul(divisors[a][i], divisors[b][i]) == 0;
            if (zero_product) g.add_edge(a, b);
        }
    return g;
}

} // namespace skelgraph
