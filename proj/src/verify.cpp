#include "skelgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "skelgraph/props.hpp"
#include "skelgraph/quotient.hpp"
#include "skelgraph/vspace.hpp"
#include "skelgraph/zdg.hpp"

namespace skelgraph {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skipped: return "SKIPPED";
    }
    return "?";
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle, bool in_complement,
                      bool require_odd) {
    const int k = int(cycle.size());
    if (k < 4) return false;
    if (require_odd && (k < 5 || k % 2 == 0)) return false;
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    auto adj = [&](int u, int v) { return in_complement ? !g.adjacent(u, v) : g.adjacent(u, v); };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (adj(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
    if (int(order.size()) != g.order()) return false;
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < int(order.size()); ++i) pos[order[i]] = i;
    for (int p : pos)
        if (p < 0) return false;
    for (int i = 0; i < g.order(); ++i) {
        std::vector<int> later;
        const Bitset& nb = g.neighbors(order[i]);
        for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
            if (pos[u] > i) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b])) return false;
    }
    return true;
}

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string labels_of(const Graph& g, const std::vector<int>& verts) {
    std::string s = "[";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ' ';
        s += g.label(verts[i]);
    }
    return s + "]";
}

std::vector<std::string> unit_labels(int q, int n) {
    std::vector<std::string> out;
    for (const auto& v : enumerate_vectors(q, n, false))
        if (skeleton(v) == IndexSet::full(n)) out.push_back(vector_label(v));
    return out;
}

long long expected_t(int q, int n) {
    long long t = 1;
    for (int i = 0; i < n; ++i) t *= q - 1;
    return t;
}

// --- the individual checks -------------------------------------------

Outcome check_igv(int q, int n, const CheckOptions&) {
    Lattice l = build_l_lattice(q, n);
    Graph rhs = join(complement(zdg_poset(l.poset()).graph), complete_graph(unit_labels(q, n)));
    auto diff = graphs_equal_labeled(build_ig(q, n), rhs);
    if (!diff.equal) return {false, diff.discrepancy};
    return {true, "|V|=" + std::to_string(rhs.order()) + " t=" + std::to_string(expected_t(q, n))};
}

Outcome check_ugv(int q, int n, const CheckOptions&) {
    Lattice l = build_l_lattice(q, n);
    Graph rhs = join(zdg_poset(l.dual().poset()).graph, complete_graph(unit_labels(q, n)));
    auto diff = graphs_equal_labeled(build_ug(q, n), rhs);
    if (!diff.equal) return {false, diff.discrepancy};
    return {true, "|V|=" + std::to_string(rhs.order()) + " t=" + std::to_string(expected_t(q, n))};
}

Outcome check_gamma_iso(int q, int n, const CheckOptions& opts) {
    Graph rhs = join(complement(ring_zdg(q, n)), complete_graph(unit_labels(q, n)));
    auto iso = are_isomorphic(build_ig(q, n), rhs, opts.iso_cap);
    if (!iso.isomorphic) return {false, "no isomorphism onto the ring-side construction"};
    return {true, "mapped " + std::to_string(rhs.order()) + " vertices"};
}

Outcome check_reduced(int q, int n, const CheckOptions& opts) {
    Graph ig_red = reduce(build_ig(q, n)).graph;
    Graph target1 = join(complement(ring_zdg(2, n)),
                         complete_graph({vector_label(Vec(std::size_t(n), 1))}));
    if (!are_isomorphic(ig_red, target1, opts.iso_cap).isomorphic)
        return {false, "reduced intersection graph is not the Boolean-ring form (" +
                           std::to_string(ig_red.order()) + " vs " +
                           std::to_string(target1.order()) + " vertices)"};

    Graph ug_quot = neighborhood_quotient(build_ug(q, n)).graph;
    std::vector<std::string> kt;
    for (long long i = 0; i < expected_t(q, n); ++i) kt.push_back("u" + std::to_string(i + 1));
    Graph target2 = join(ring_zdg(2, n), complete_graph(kt));
    if (!are_isomorphic(ug_quot, target2, opts.iso_cap).isomorphic)
        return {false, "union-graph neighborhood quotient is not the Boolean-ring form (" +
                           std::to_string(ug_quot.order()) + " vs " +
                           std::to_string(target2.order()) + " vertices)"};
    return {true, "quotients of " + std::to_string(ig_red.order()) + " and " +
                      std::to_string(ug_quot.order()) + " classes"};
}

Outcome check_boolean_compress(int q, int n, const CheckOptions& opts) {
    Lattice l = build_l_lattice(q, n);
    auto cp = compress(l.poset());
    if (cp.quotient.size() != (1 << n))
        return {false, "compressed lattice has " + std::to_string(cp.quotient.size()) +
                           " classes, expected " + std::to_string(1 << n)};
    if (!is_boolean_lattice(cp.quotient))
        return {false, "compressed lattice is not Boolean"};
    auto iso = are_isomorphic(zdg_poset(cp.quotient).graph, ring_zdg(2, n), opts.iso_cap);
    if (!iso.isomorphic)
        return {false, "zero-divisor graph of the compression differs from the Boolean-ring one"};
    return {true, std::to_string(1 << n) + " classes, Boolean"};
}

Outcome check_chain_replace(const CheckOptions&) {
    auto corpus = all_lattices_up_to(6);
    int replacements = 0;
    for (const auto& l : corpus) {
        const bool d0 = is_0_distributive(l), d1 = is_1_distributive(l);
        for (int x = 0; x < l.size(); ++x)
            for (int len : {2, 3}) {
                Lattice r = chain_replace(l, x, len);
                if (!is_lattice(r.poset()))
                    return {false, "replacement broke lattice-ness at size " +
                                       std::to_string(l.size()) + ", element " + l.label(x)};
                if (d0 && !is_0_distributive(r))
                    return {false, "0-distributivity lost at size " + std::to_string(l.size()) +
                                       ", element " + l.label(x) + ", chain " + std::to_string(len)};
                if (d1 && !is_1_distributive(r))
                    return {false, "1-distributivity lost at size " + std::to_string(l.size()) +
                                       ", element " + l.label(x) + ", chain " + std::to_string(len)};
                ++replacements;
            }
    }
    return {true, std::to_string(corpus.size()) + " lattices, " + std::to_string(replacements) +
                      " replacements"};
}

Outcome check_lemma22(int q, int n, const CheckOptions&) {
    Lattice l = build_l_lattice(q, n);
    const Poset& p = l.poset();
    auto cp = compress(p);
    Graph g = zdg_poset(p).graph;

    std::vector<int> vertex_of(p.size(), -1);
    for (int x = 0; x < p.size(); ++x)
        if (auto v = g.index_of(p.label(x))) vertex_of[x] = *v;

    // Vertex membership is classwise (all of a class in the graph or none).
    for (std::size_t c = 1; c < cp.members.size(); ++c) {
        int in = 0;
        for (int x : cp.members[c]) in += vertex_of[x] >= 0;
        if (in != 0 && in != int(cp.members[c].size()))
            return {false, "class " + cp.quotient.label(int(c)) + " straddles the vertex set"};
    }

    // Atom classes are exactly the atoms of the compression.
    {
        std::vector<int> expected;
        for (int a : atoms(p)) expected.push_back(cp.class_of[a]);
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        auto quotient_atoms = atoms(cp.quotient);
        std::sort(quotient_atoms.begin(), quotient_atoms.end());
        if (expected != quotient_atoms)
            return {false, "atom classes and compression atoms disagree"};
    }

    // Order on classes is key inclusion and matches annihilator containment
    // for every pair of representatives; monotone under the projection.
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && !cp.quotient.leq(cp.class_of[x], cp.class_of[y]))
                return {false, "projection is not monotone at " + p.label(x)};
    std::vector<Bitset> ann;
    for (int x = 0; x < p.size(); ++x) ann.push_back(annihilator(p, x));
    for (std::size_t c1 = 1; c1 < cp.members.size(); ++c1)
        for (std::size_t c2 = 1; c2 < cp.members.size(); ++c2) {
            const bool by_key = cp.keys[c1].subset_of(cp.keys[c2]);
            for (int a : cp.members[c1])
                for (int b : cp.members[c2])
                    if (ann[b].is_subset_of(ann[a]) != by_key)
                        return {false, "annihilator order disagrees with key inclusion at " +
                                           p.label(a) + ", " + p.label(b)};
        }

    // Graph side: classes independent, cross edges exactly on disjoint
    // keys (hence complete bipartite between adjacent classes), and equal
    // degrees within a class.
    for (std::size_t c1 = 1; c1 < cp.members.size(); ++c1) {
        int degree = -1;
        for (std::size_t i = 0; i < cp.members[c1].size(); ++i) {
            const int v = vertex_of[cp.members[c1][i]];
            if (v < 0) continue;
            if (degree < 0) degree = g.degree(v);
            if (g.degree(v) != degree)
                return {false, "unequal degrees inside class " + cp.quotient.label(int(c1))};
            for (std::size_t j = i + 1; j < cp.members[c1].size(); ++j) {
                const int u = vertex_of[cp.members[c1][j]];
                if (u >= 0 && g.adjacent(v, u))
                    return {false, "class " + cp.quotient.label(int(c1)) + " is not independent"};
            }
        }
        for (std::size_t c2 = c1 + 1; c2 < cp.members.size(); ++c2) {
            const bool disjoint = !cp.keys[c1].intersects(cp.keys[c2]);
            for (int x : cp.members[c1])
                for (int y : cp.members[c2]) {
                    const int v = vertex_of[x], u = vertex_of[y];
                    if (v < 0 || u < 0) {
                        if (disjoint)
                            return {false, "non-vertex element in adjacent class pair"};
                        continue;
                    }
                    if (g.adjacent(v, u) != disjoint)
                        return {false, "adjacency between " + p.label(x) + " and " + p.label(y) +
                                           " contradicts key disjointness"};
                }
        }
    }
    return {true, std::to_string(cp.members.size() - 1) + " classes checked"};
}

Outcome check_chordal_cor(int q, int n, const CheckOptions&) {
    const bool expect_ig = n <= 3;
    const bool expect_ug = n == 1 || (q == 2 && (n == 2 || n == 3));
    for (auto [graph, expected, name] :
         {std::tuple(build_ig(q, n), expect_ig, "intersection"),
          std::tuple(build_ug(q, n), expect_ug, "union")}) {
        auto res = is_chordal(graph);
        if (res.chordal && !is_perfect_elimination_order(graph, res.elimination_order))
            return {false, std::string(name) + " graph: elimination order fails verification"};
        if (!res.chordal && !is_induced_cycle(graph, res.chordless_cycle, false, false))
            return {false, std::string(name) + " graph: invalid chordless-cycle certificate"};
        if (res.chordal != expected)
            return {false, std::string(name) + " graph: chordal=" +
                               (res.chordal ? "true" : "false") + ", expected " +
                               (expected ? "true" : "false") +
                               (res.chordal ? "" : "; cycle " +
                                                       labels_of(graph, res.chordless_cycle))};
    }
    return {true, std::string("chordal(ig)=") + (expect_ig ? "true" : "false") +
                      " chordal(ug)=" + (expect_ug ? "true" : "false")};
}

Outcome check_perfect_cor(int q, int n, const CheckOptions& opts) {
    const bool expected = n <= 4;
    for (auto [graph, name] :
         {std::pair(build_ig(q, n), "intersection"), std::pair(build_ug(q, n), "union")}) {
        auto res = is_perfect(graph, opts.perfect_cap);
        if (!res.perfect && !is_induced_cycle(graph, res.odd_hole, res.in_complement, true))
            return {false, std::string(name) + " graph: invalid odd-hole certificate"};
        if (res.perfect != expected)
            return {false, std::string(name) + " graph: perfect=" +
                               (res.perfect ? "true" : "false") + ", expected " +
                               (expected ? "true" : "false") +
                               (res.perfect
                                    ? ""
                                    : "; " + std::string(res.in_complement ? "antihole " : "hole ") +
                                          labels_of(graph, res.odd_hole))};
    }
    return {true, std::string("perfect=") + (expected ? "true" : "false")};
}

Outcome check_diameter(int q, int n, const CheckOptions&) {
    auto zd = zdg_poset(build_l_lattice(q, n).poset());
    if (!zd.trivial) {
        if (!is_connected(zd.graph)) return {false, "zero-divisor graph disconnected"};
        auto d = diameter(zd.graph);
        if (!d || *d > 3)
            return {false, "zero-divisor graph diameter " + (d ? std::to_string(*d) : "inf")};
    }
    if (n >= 2) {
        for (auto [graph, name] :
             {std::pair(build_ig(q, n), "intersection"), std::pair(build_ug(q, n), "union")}) {
            auto d = diameter(graph);
            if (!d) return {false, std::string(name) + " graph disconnected"};
            if (*d > 2)
                return {false, std::string(name) + " graph diameter " + std::to_string(*d)};
        }
    }
    for (const auto& [key, members] : partition_classes(q, n)) {
        const long long expected = key.is_empty() ? 1 : [&] {
            long long e = 1;
            for (int i = 0; i < key.count(); ++i) e *= q - 1;
            return e;
        }();
        if (static_cast<long long>(members.size()) != expected)
            return {false, "|V_" + key.label() + "| = " + std::to_string(members.size()) +
                               ", expected " + std::to_string(expected)};
    }
    return {true, "diameters and class sizes as stated"};
}

Outcome check_weakly_perfect(int q, int n, const CheckOptions& opts) {
    std::string detail;
    for (auto [graph, name] :
         {std::pair(build_ig(q, n), "ig"), std::pair(build_ug(q, n), "ug")}) {
        const int omega = clique_number(graph, opts.color_cap);
        const int chi = chromatic_number(graph, opts.color_cap);
        if (chi != omega)
            return {false, std::string(name) + ": chi=" + std::to_string(chi) +
                               " omega=" + std::to_string(omega)};
        detail += std::string(name) + ":" + std::to_string(chi) + " ";
    }
    return {true, "chi=omega (" + detail + ")"};
}

} // namespace

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = {
        "igv",     "ugv",         "gamma-iso",   "reduced",  "boolean-compress", "chain-replace",
        "lemma22", "chordal-cor", "perfect-cor", "diameter", "weakly-perfect"};
    return ids;
}

bool is_check_id(const std::string& id) {
    const auto& ids = check_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool check_uses_grid(const std::string& id) { return id != "chain-replace"; }

CheckResult run_check(const std::string& id, int q, int n, const CheckOptions& opts) {
    using Clock = std::chrono::steady_clock;
    CheckResult result;
    result.id = id;
    result.q = check_uses_grid(id) ? q : 0;
    result.n = check_uses_grid(id) ? n : 0;
    const auto start = Clock::now();
    try {
        Outcome outcome;
        if (id == "igv") outcome = check_igv(q, n, opts);
        else if (id == "ugv") outcome = check_ugv(q, n, opts);
        else if (id == "gamma-iso") outcome = check_gamma_iso(q, n, opts);
        else if (id == "reduced") outcome = check_reduced(q, n, opts);
        else if (id == "boolean-compress") outcome = check_boolean_compress(q, n, opts);
        else if (id == "chain-replace") outcome = check_chain_replace(opts);
        else if (id == "lemma22") outcome = check_lemma22(q, n, opts);
        else if (id == "chordal-cor") outcome = check_chordal_cor(q, n, opts);
        else if (id == "perfect-cor") outcome = check_perfect_cor(q, n, opts);
        else if (id == "diameter") outcome = check_diameter(q, n, opts);
        else if (id == "weakly-perfect") outcome = check_weakly_perfect(q, n, opts);
        else throw Error("unknown check id '" + id + "'");
        result.status = outcome.ok ? CheckStatus::pass : CheckStatus::fail;
        result.detail = std::move(outcome.detail);
    } catch (const CapExceeded& e) {
        result.status = CheckStatus::skipped;
        result.detail = e.what();
    }
    result.wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
}

std::vector<CheckResult> run_sweep(const SweepConfig& config) {
    std::vector<CheckResult> results;
    if (config.qs.empty() || config.ns.empty()) return results;  // empty grid, empty report
    for (const auto& id : check_ids()) {
        if (!check_uses_grid(id)) {
            results.push_back(run_check(id, 0, 0, config.opts));
            continue;
        }
        for (int q : config.qs)
            for (int n : config.ns) results.push_back(run_check(id, q, n, config.opts));
    }
    return results;
}

std::string report_table(const std::vector<CheckResult>& results, bool with_times) {
    std::ostringstream os;
    os << "check               q   n   status    " << (with_times ? "ms       " : "")
       << "detail\n";
    os << "------------------- --- --- --------- " << (with_times ? "-------- " : "")
       << "------\n";
    for (const auto& r : results) {
        std::string detail = r.detail;
        if (detail.size() > 90) detail = detail.substr(0, 87) + "...";
        char line[64];
        if (with_times)
            std::snprintf(line, sizeof line, "%-19s %-3s %-3s %-9s %8.1f ", r.id.c_str(),
                          r.q ? std::to_string(r.q).c_str() : "-",
                          r.n ? std::to_string(r.n).c_str() : "-", to_string(r.status).c_str(),
                          r.wall_ms);
        else
            std::snprintf(line, sizeof line, "%-19s %-3s %-3s %-9s ", r.id.c_str(),
                          r.q ? std::to_string(r.q).c_str() : "-",
                          r.n ? std::to_string(r.n).c_str() : "-", to_string(r.status).c_str());
        os << line << detail << "\n";
    }
    int fails = 0, skips = 0;
    for (const auto& r : results) {
        fails += r.status == CheckStatus::fail;
        skips += r.status == CheckStatus::skipped;
    }
    os << results.size() << " checks, " << fails << " failed, " << skips << " skipped\n";
    return os.str();
}

nlohmann::ordered_json report_json(const SweepConfig& config,
                                   const std::vector<CheckResult>& results) {
    nlohmann::ordered_json j;
    j["grid"]["q"] = config.qs;
    j["grid"]["n"] = config.ns;
    j["checks"] = nlohmann::json::array();
    int fails = 0, skips = 0;
    for (const auto& r : results) {
        nlohmann::ordered_json c;
        c["id"] = r.id;
        if (r.q) c["q"] = r.q;
        if (r.n) c["n"] = r.n;
        c["status"] = to_string(r.status);
        c["detail"] = r.detail;
        j["checks"].push_back(std::move(c));
        fails += r.status == CheckStatus::fail;
        skips += r.status == CheckStatus::skipped;
    }
    j["failures"] = fails;
    j["skipped"] = skips;
    return j;
}

} // namespace skelgraph
