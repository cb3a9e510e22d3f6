#include "skelgraph/props.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

#include "skelgraph/errors.hpp"

namespace skelgraph {

// ------------------------------------------------------------- distances

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        const Bitset& nb = g.neighbors(u);
        for (int v = nb.find_first(); v >= 0; v = nb.find_next(v))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::optional<int> diameter(const Graph& g) {
    if (g.order() <= 1) return 0;
    int diam = 0;
    for (int s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

// ------------------------------------------------------------ chordality

namespace {

// Chordless cycle through some vertex v with non-adjacent neighbors u, w:
// v + a shortest u-w path avoiding the rest of N[v]. Succeeds for at
// least one such triple whenever the graph is not chordal.
std::vector<int> extract_chordless_cycle(const Graph& g) {
    const int m = g.order();
    for (int v = 0; v < m; ++v) {
        auto nb = g.neighbors(v).to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int u = nb[i], w = nb[j];
                if (g.adjacent(u, w)) continue;
                Bitset allowed(m);
                for (int x = 0; x < m; ++x) allowed.set(x);
                allowed.subtract(g.neighbors(v));
                allowed.reset(v);
                allowed.set(u);
                allowed.set(w);
                // BFS from u to w inside `allowed`.
                std::vector<int> parent(m, -2);
                std::queue<int> q;
                parent[u] = -1;
                q.push(u);
                while (!q.empty() && parent[w] == -2) {
                    int x = q.front();
                    q.pop();
                    const Bitset& nx = g.neighbors(x);
                    for (int y = nx.find_first(); y >= 0; y = nx.find_next(y))
                        if (allowed.test(y) && parent[y] == -2) {
                            parent[y] = x;
                            q.push(y);
                        }
                }
                if (parent[w] == -2) continue;
                std::vector<int> cycle{v};
                std::vector<int> path;
                for (int x = w; x != -1; x = parent[x]) path.push_back(x);
                cycle.insert(cycle.end(), path.rbegin(), path.rend());
                return cycle;
            }
    }
    return {};
}

} // namespace

ChordalityResult is_chordal(const Graph& g) {
    const int m = g.order();
    // Maximum cardinality search; ties broken by lowest index.
    std::vector<int> weight(m, 0);
    std::vector<char> visited(m, 0);
    std::vector<int> visit_order;
    visit_order.reserve(m);
    for (int step = 0; step < m; ++step) {
        int pick = -1;
        for (int v = 0; v < m; ++v)
            if (!visited[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
        visited[pick] = 1;
        visit_order.push_back(pick);
        const Bitset& nb = g.neighbors(pick);
        for (int v = nb.find_first(); v >= 0; v = nb.find_next(v))
            if (!visited[v]) ++weight[v];
    }
    std::vector<int> elim(visit_order.rbegin(), visit_order.rend());
    std::vector<int> pos(m);
    for (int i = 0; i < m; ++i) pos[elim[i]] = i;

    // The reverse of an MCS order is a perfect elimination ordering iff
    // the graph is chordal; verify the simplicial condition directly.
    for (int i = 0; i < m; ++i) {
        const int v = elim[i];
        std::vector<int> later;
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
            if (pos[u] > i) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b])) {
                    auto cycle = extract_chordless_cycle(g);
                    assert(cycle.size() >= 4);
                    return {false, {}, std::move(cycle)};
                }
    }
    return {true, std::move(elim), {}};
}

// ---------------------------------------------------------- twin classes

std::vector<int> twin_representatives(const Graph& g) {
    const int m = g.order();
    Bitset alive(m);
    for (int v = 0; v < m; ++v) alive.set(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = alive.find_first(); u >= 0; u = alive.find_next(u))
            for (int v = alive.find_next(u); v >= 0; v = alive.find_next(v)) {
                Bitset nu = g.neighbors(u) & alive;
                Bitset nv = g.neighbors(v) & alive;
                nu.reset(v);
                nv.reset(u);
                if (nu == nv) {
                    alive.reset(v);
                    changed = true;
                }
            }
    }
    return alive.to_vector();
}

// ---------------------------------------------------------- odd holes

namespace {

struct HoleSearch {
    const Graph& g;
    std::vector<int> path;   // path[0] = anchor = minimum vertex of the cycle
    Bitset blocked;          // on path, <= anchor, or adjacent to an interior vertex
    std::vector<int> found;

    explicit HoleSearch(const Graph& graph) : g(graph), blocked(graph.order()) {}

    bool extend(int last) {
        const int anchor = path[0];
        Bitset cand = g.neighbors(last);
        cand.subtract(blocked);
        for (int w = cand.find_first(); w >= 0; w = cand.find_next(w)) {
            if (g.adjacent(w, anchor)) {
                // Closing vertex: cycle anchor..last,w of length |path|+1.
                const int len = int(path.size()) + 1;
                if (len >= 5 && len % 2 == 1) {
                    found = path;
                    found.push_back(w);
                    return true;
                }
                continue;  // cannot pass through a neighbor of the anchor
            }
            Bitset saved = blocked;
            blocked |= g.neighbors(last);  // `last` becomes interior
            blocked.set(w);
            path.push_back(w);
            if (extend(w)) return true;
            path.pop_back();
            blocked = std::move(saved);
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g) {
    const int m = g.order();
    for (int s = 0; s < m; ++s) {
        const Bitset& nb = g.neighbors(s);
        for (int first = nb.find_next(s); first >= 0; first = nb.find_next(first)) {
            HoleSearch search(g);
            search.path = {s, first};
            for (int x = 0; x <= s; ++x) search.blocked.set(x);
            search.blocked.set(first);
            if (search.extend(first)) return search.found;
        }
    }
    return std::nullopt;
}

PerfectionResult is_perfect(const Graph& g, int reduced_cap) {
    auto reps = twin_representatives(g);
    if (int(reps.size()) > reduced_cap)
        throw CapExceeded("twin-reduced graph has " + std::to_string(reps.size()) +
                          " vertices, above the cap of " + std::to_string(reduced_cap));
    Graph r = g.induced(reps);
    if (auto hole = find_odd_hole(r)) {
        std::vector<int> orig;
        for (int v : *hole) orig.push_back(reps[v]);
        return {false, std::move(orig), false};
    }
    if (auto hole = find_odd_hole(complement(r))) {
        std::vector<int> orig;
        for (int v : *hole) orig.push_back(reps[v]);
        return {false, std::move(orig), true};
    }
    return {true, {}, false};
}

// ------------------------------------------------------------- cliques

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;
    std::vector<int> current, best_clique;

    explicit CliqueSearch(const Graph& graph) : g(graph) {}

    void expand(Bitset p) {
        if (p.none()) {
            if (int(current.size()) > best) {
                best = int(current.size());
                best_clique = current;
            }
            return;
        }
        // Greedy color classes over p give an upper bound per candidate.
        std::vector<Bitset> classes;
        std::vector<std::pair<int, int>> order;  // (vertex, color)
        for (int v = p.find_first(); v >= 0; v = p.find_next(v)) {
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g.neighbors(v))) ++c;
            if (c == classes.size()) classes.emplace_back(g.order());
            classes[c].set(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v = classes[c].find_first(); v >= 0; v = classes[c].find_next(v))
                order.emplace_back(v, int(c) + 1);
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            auto [v, bound] = order[i];
            if (int(current.size()) + bound <= best) return;
            current.push_back(v);
            expand(p & g.neighbors(v));
            current.pop_back();
            p.reset(v);
        }
    }
};

} // namespace

int clique_number(const Graph& g, int cap, std::vector<int>* witness) {
    if (g.order() > cap)
        throw CapExceeded("clique search on " + std::to_string(g.order()) +
                          " vertices, above the cap of " + std::to_string(cap));
    if (g.order() == 0) {
        if (witness) witness->clear();
        return 0;
    }
    CliqueSearch search(g);
    Bitset all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    search.expand(all);
    if (witness) *witness = search.best_clique;
    return search.best;
}

// ------------------------------------------------------------- coloring

namespace {

struct ColorSearch {
    const Graph& g;
    int best_count;               // current upper bound (valid coloring known)
    std::vector<int> best, cur;   // colors, 1-based; 0 = uncolored
    int lower;

    ColorSearch(const Graph& graph, int upper, std::vector<int> initial, int lb)
        : g(graph), best_count(upper), best(std::move(initial)), cur(graph.order(), 0), lower(lb) {}

    // Highest saturation, then lowest index, among uncolored vertices.
    int pick() const {
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (cur[v]) continue;
            Bitset seen(best_count + 2);
            const Bitset& nb = g.neighbors(v);
            for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
                if (cur[u]) seen.set(cur[u]);
            int sat = seen.count();
            if (sat > pick_sat) {
                pick_sat = sat;
                pick = v;
            }
        }
        return pick;
    }

    void run(int colored, int used) {
        if (used >= best_count) return;
        if (colored == g.order()) {
            best_count = used;
            best = cur;
            return;
        }
        const int v = pick();
        const Bitset& nb = g.neighbors(v);
        for (int c = 1; c <= std::min(used + 1, best_count - 1); ++c) {
            bool ok = true;
            for (int u = nb.find_first(); ok && u >= 0; u = nb.find_next(u))
                ok = cur[u] != c;
            if (!ok) continue;
            cur[v] = c;
            run(colored + 1, std::max(used, c));
            cur[v] = 0;
            if (best_count == lower) return;  // cannot improve further
        }
    }
};

// Saturation-greedy proper coloring; returns the colors used.
std::vector<int> greedy_coloring(const Graph& g) {
    const int m = g.order();
    std::vector<int> color(m, 0);
    for (int step = 0; step < m; ++step) {
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < m; ++v) {
            if (color[v]) continue;
            Bitset seen(m + 2);
            const Bitset& nb = g.neighbors(v);
            for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
                if (color[u]) seen.set(color[u]);
            int sat = seen.count();
            if (sat > pick_sat) {
                pick_sat = sat;
                pick = v;
            }
        }
        int c = 1;
        while (true) {
            bool ok = true;
            const Bitset& nb = g.neighbors(pick);
            for (int u = nb.find_first(); ok && u >= 0; u = nb.find_next(u))
                ok = color[u] != c;
            if (ok) break;
            ++c;
        }
        color[pick] = c;
    }
    return color;
}

} // namespace

int chromatic_number(const Graph& g, int cap, std::vector<int>* coloring) {
    if (g.order() > cap)
        throw CapExceeded("coloring search on " + std::to_string(g.order()) +
                          " vertices, above the cap of " + std::to_string(cap));
    if (g.order() == 0) {
        if (coloring) coloring->clear();
        return 0;
    }
    std::vector<int> clique;
    const int lower = clique_number(g, cap, &clique);
    auto greedy = greedy_coloring(g);
    const int upper = *std::max_element(greedy.begin(), greedy.end());
    if (upper == lower) {
        if (coloring) *coloring = greedy;
        return upper;
    }
    ColorSearch search(g, upper, greedy, lower);
    // Any proper coloring separates a clique; fixing its colors breaks the
    // color-permutation symmetry without losing optima.
    for (int i = 0; i < int(clique.size()); ++i) search.cur[clique[i]] = i + 1;
    search.run(int(clique.size()), int(clique.size()));
    if (coloring) *coloring = search.best;
    return search.best_count;
}

bool is_weakly_perfect(const Graph& g, int cap) {
    return chromatic_number(g, cap) == clique_number(g, cap);
}

// ---------------------------------------------------------- isomorphism

namespace {

// Joint iterated refinement; returns per-graph color vectors or nullopt
// when the color multisets ever disagree.
std::optional<std::pair<std::vector<int>, std::vector<int>>> joint_refine(const Graph& g,
                                                                          const Graph& h) {
    std::vector<int> cg(g.order(), 0), ch(h.order(), 0);
    int colors = 1;
    for (int round = 0; round <= g.order(); ++round) {
        std::map<std::vector<int>, int> dict;
        auto signature = [&](const Graph& graph, const std::vector<int>& col, int v) {
            std::vector<int> sig{col[v]};
            std::vector<int> nbc;
            const Bitset& nb = graph.neighbors(v);
            for (int u = nb.find_first(); u >= 0; u = nb.find_next(u)) nbc.push_back(col[u]);
            std::sort(nbc.begin(), nbc.end());
            sig.insert(sig.end(), nbc.begin(), nbc.end());
            return sig;
        };
        std::vector<int> ng(g.order()), nh(h.order());
        for (int v = 0; v < g.order(); ++v) {
            auto sig = signature(g, cg, v);
            auto it = dict.try_emplace(sig, int(dict.size())).first;
            ng[v] = it->second;
        }
        for (int v = 0; v < h.order(); ++v) {
            auto sig = signature(h, ch, v);
            auto it = dict.find(sig);
            if (it == dict.end()) return std::nullopt;
            nh[v] = it->second;
        }
        std::map<int, std::pair<int, int>> counts;
        for (int c : ng) counts[c].first++;
        for (int c : nh) counts[c].second++;
        for (auto& [c, pair] : counts)
            if (pair.first != pair.second) return std::nullopt;
        const int ncolors = int(dict.size());
        cg = std::move(ng);
        ch = std::move(nh);
        if (ncolors == colors) break;
        colors = ncolors;
    }
    return std::pair(std::move(cg), std::move(ch));
}

struct IsoSearch {
    const Graph &g, &h;
    const std::vector<int> &cg, &ch;
    std::vector<int> order;       // g's vertices, rarest color class first
    std::vector<int> map_gh, map_hg;

    IsoSearch(const Graph& g_, const Graph& h_, const std::vector<int>& cg_,
              const std::vector<int>& ch_)
        : g(g_), h(h_), cg(cg_), ch(ch_), map_gh(g_.order(), -1), map_hg(h_.order(), -1) {
        std::map<int, int> class_size;
        for (int c : cg) class_size[c]++;
        order.resize(g.order());
        for (int v = 0; v < g.order(); ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::tuple(class_size[cg[a]], cg[a], a) <
                   std::tuple(class_size[cg[b]], cg[b], b);
        });
    }

    bool assign(std::size_t depth) {
        if (depth == order.size()) return true;
        const int u = order[depth];
        for (int v = 0; v < h.order(); ++v) {
            if (map_hg[v] >= 0 || ch[v] != cg[u]) continue;
            bool ok = true;
            for (std::size_t i = 0; ok && i < depth; ++i) {
                const int u2 = order[i];
                ok = g.adjacent(u, u2) == h.adjacent(v, map_gh[u2]);
            }
            if (!ok) continue;
            map_gh[u] = v;
            map_hg[v] = u;
            if (assign(depth + 1)) return true;
            map_gh[u] = -1;
            map_hg[v] = -1;
        }
        return false;
    }
};

} // namespace

IsoResult are_isomorphic(const Graph& g, const Graph& h, int cap) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return {false, {}};
    if (g.order() > cap)
        throw CapExceeded("isomorphism search on " + std::to_string(g.order()) +
                          " vertices, above the cap of " + std::to_string(cap));
    if (g.order() == 0) return {true, {}};
    auto refined = joint_refine(g, h);
    if (!refined) return {false, {}};
    IsoSearch search(g, h, refined->first, refined->second);
    if (!search.assign(0)) return {false, {}};
    return {true, std::move(search.map_gh)};
}

// ------------------------------------------------------ labeled equality

LabeledDiff graphs_equal_labeled(const Graph& g, const Graph& h) {
    for (const auto& l : g.labels())
        if (!h.index_of(l)) return {false, "vertex '" + l + "' only in first graph"};
    for (const auto& l : h.labels())
        if (!g.index_of(l)) return {false, "vertex '" + l + "' only in second graph"};

    auto edge_labels = [](const Graph& graph) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [u, v] : graph.edge_pairs()) {
            auto a = graph.label(u), b = graph.label(v);
            if (b < a) std::swap(a, b);
            out.emplace_back(std::move(a), std::move(b));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto eg = edge_labels(g), eh = edge_labels(h);
    for (const auto& e : eg)
        if (!std::binary_search(eh.begin(), eh.end(), e))
            return {false, "edge {" + e.first + "," + e.second + "} only in first graph"};
    for (const auto& e : eh)
        if (!std::binary_search(eg.begin(), eg.end(), e))
            return {false, "edge {" + e.first + "," + e.second + "} only in second graph"};
    return {true, ""};
}

} // namespace skelgraph
