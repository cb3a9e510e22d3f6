#include "skelgraph/order.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "skelgraph/field.hpp"
#include "skelgraph/vspace.hpp"

namespace skelgraph {

// ---------------------------------------------------------------- Poset

Poset::Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& leq_pairs)
    : labels_(std::move(labels)) {
    const int m = size();
    up_.assign(m, Bitset(m));
    for (auto [i, j] : leq_pairs) {
        if (i < 0 || j < 0 || i >= m || j >= m)
            throw OrderError("leq pair out of range");
        up_[i].set(j);
    }
    validate_and_finish();
}

Poset::Poset(std::vector<std::string> labels, std::vector<Bitset> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
    validate_and_finish();
}

void Poset::validate_and_finish() {
    const int m = size();
    {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (int(seen.size()) != m) throw OrderError("duplicate element label");
    }
    for (int i = 0; i < m; ++i) up_[i].set(i);
    for (int i = 0; i < m; ++i)
        for (int j = up_[i].find_first(); j >= 0; j = up_[i].find_next(j)) {
            if (i != j && up_[j].test(i))
                throw OrderError("relation not antisymmetric: " + labels_[i] + " ~ " + labels_[j]);
            if (!up_[j].is_subset_of(up_[i]))
                throw OrderError("relation not transitive at " + labels_[i] + " <= " + labels_[j]);
        }
    down_.assign(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = up_[i].find_first(); j >= 0; j = up_[i].find_next(j))
            down_[j].set(i);
    for (int i = 0; i < m; ++i) {
        if (up_[i].count() == m) zero_ = i;
        if (down_[i].count() == m) one_ = i;
    }
}

int Poset::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw OrderError("no element labelled '" + label + "'");
}

int Poset::require_zero() const {
    if (!zero_) throw OrderError("poset has no least element");
    return *zero_;
}

int Poset::require_one() const {
    if (!one_) throw OrderError("poset has no greatest element");
    return *one_;
}

Bitset Poset::lower_cone(std::span<const int> a) const {
    if (a.empty()) throw OrderError("cone of the empty set");
    Bitset cone = down_[a[0]];
    for (int x : a.subspan(1)) cone &= down_[x];
    return cone;
}

Bitset Poset::upper_cone(std::span<const int> a) const {
    if (a.empty()) throw OrderError("cone of the empty set");
    Bitset cone = up_[a[0]];
    for (int x : a.subspan(1)) cone &= up_[x];
    return cone;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (lt(a, b) && (up_[a] & down_[b]).count() == 2)
                covers.emplace_back(a, b);
    return covers;
}

Poset Poset::dual() const {
    return from_relation(labels_, [this](int a, int b) { return leq(b, a); });
}

// ------------------------------------------------- zero-divisor machinery

Bitset zero_divisors(const Poset& p) {
    const int z = p.require_zero();
    const int m = p.size();
    Bitset zero_only(m);
    zero_only.set(z);
    Bitset zd(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (b == z) continue;
            if ((p.down(a) & p.down(b)) == zero_only) {
                zd.set(a);
                break;
            }
        }
    return zd;
}

std::vector<int> zdg_vertex_set(const Poset& p) {
    Bitset zd = zero_divisors(p);
    zd.reset(p.require_zero());
    return zd.to_vector();
}

Bitset dense_elements(const Poset& p) {
    Bitset d = zero_divisors(p);
    Bitset out(p.size());
    for (int x = 0; x < p.size(); ++x)
        if (!d.test(x)) out.set(x);
    return out;
}

Bitset annihilator(const Poset& p, int a) {
    const int z = p.require_zero();
    Bitset zero_only(p.size());
    zero_only.set(z);
    Bitset ann(p.size());
    for (int x = 0; x < p.size(); ++x)
        if ((p.down(a) & p.down(x)) == zero_only) ann.set(x);
    return ann;
}

std::vector<int> atoms(const Poset& p) {
    const int z = p.require_zero();
    std::vector<int> out;
    for (int a = 0; a < p.size(); ++a)
        if (a != z && p.down(a).count() == 2) out.push_back(a);
    return out;
}

bool is_0_distributive(const Poset& p) {
    const int z = p.require_zero();
    const int m = p.size();
    Bitset zero_only(m);
    zero_only.set(z);

    std::vector<Bitset> ann(m);
    for (int a = 0; a < m; ++a) ann[a] = annihilator(p, a);

    Bitset everything(m);
    for (int i = 0; i < m; ++i) everything.set(i);

    for (int b = 0; b < m; ++b)
        for (int c = b; c < m; ++c) {
            // Lower cone of {b,c}^u once per pair; all of P when the
            // upper cone is empty.
            Bitset ucone = p.up(b) & p.up(c);
            Bitset lbc = everything;
            for (int u = ucone.find_first(); u >= 0; u = ucone.find_next(u))
                lbc &= p.down(u);
            for (int a = 0; a < m; ++a) {
                if (!ann[a].test(b) || !ann[a].test(c)) continue;
                if (!((p.down(a) & lbc) == zero_only)) return false;
            }
        }
    return true;
}

bool is_1_distributive(const Poset& p) {
    p.require_one();
    return is_0_distributive(p.dual());
}

// ------------------------------------------------------ atom partition

std::vector<AtomClass> atom_partition(const Poset& p) {
    const int z = p.require_zero();
    const auto atom_list = atoms(p);
    if (atom_list.size() > 32) throw CapExceeded("more than 32 atoms");

    std::vector<AtomClass> classes;
    auto class_with_key = [&](IndexSet key) -> AtomClass& {
        for (auto& c : classes)
            if (c.key == key) return c;
        classes.push_back({key, {}});
        return classes.back();
    };
    for (int x = 0; x < p.size(); ++x) {
        if (x == z) continue;
        IndexSet key;
        for (int i = 0; i < int(atom_list.size()); ++i)
            if (p.leq(atom_list[i], x)) key.add(i + 1);
        // Every nonzero element of a finite poset with 0 lies above an atom.
        assert(!key.is_empty());
        class_with_key(key).members.push_back(x);
    }
    std::sort(classes.begin(), classes.end(), [](const AtomClass& a, const AtomClass& b) {
        return std::pair(a.key.count(), a.key.bits) < std::pair(b.key.count(), b.key.bits);
    });
    return classes;
}

CompressedPoset compress(const Poset& p) {
    const int z = p.require_zero();
    auto part = atom_partition(p);

    CompressedPoset cp;
    cp.keys.push_back(IndexSet::empty());
    cp.members.push_back({z});
    for (auto& c : part) {
        cp.keys.push_back(c.key);
        cp.members.push_back(std::move(c.members));
    }

    std::vector<std::string> labels;
    labels.reserve(cp.keys.size());
    for (const auto& k : cp.keys) labels.push_back(k.label());

    cp.quotient = Poset::from_relation(std::move(labels), [&](int a, int b) {
        return cp.keys[a].subset_of(cp.keys[b]);
    });

    cp.class_of.assign(p.size(), -1);
    for (int c = 0; c < int(cp.members.size()); ++c)
        for (int x : cp.members[c]) cp.class_of[x] = c;
    return cp;
}

bool is_boolean_lattice(const Poset& p) {
    if (!p.zero()) return false;
    const int z = *p.zero();
    const auto atom_list = atoms(p);
    const int k = int(atom_list.size());
    if (k > 20 || p.size() != (1 << k)) return false;

    std::vector<std::uint32_t> key(p.size(), 0);
    std::vector<char> seen(std::size_t(1) << k, 0);
    for (int x = 0; x < p.size(); ++x) {
        for (int i = 0; i < k; ++i)
            if (p.leq(atom_list[i], x)) key[x] |= std::uint32_t{1} << i;
        if (x != z && key[x] == 0) return false;
        if (seen[key[x]]) return false;
        seen[key[x]] = 1;
    }
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y) != ((key[x] & ~key[y]) == 0)) return false;
    return true;
}

// -------------------------------------------------------------- Lattice

std::optional<Lattice> Lattice::try_from_poset(Poset p) {
    const int m = p.size();
    if (m == 0 || !p.zero() || !p.one()) return std::nullopt;

    Lattice l;
    l.meet_.assign(std::size_t(m) * m, -1);
    l.join_.assign(std::size_t(m) * m, -1);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            Bitset lower = p.down(a) & p.down(b);
            int meet = -1;
            for (int c = lower.find_first(); c >= 0; c = lower.find_next(c))
                if (lower.is_subset_of(p.down(c))) {
                    meet = c;
                    break;
                }
            if (meet < 0) return std::nullopt;
            Bitset upper = p.up(a) & p.up(b);
            int join = -1;
            for (int c = upper.find_first(); c >= 0; c = upper.find_next(c))
                if (upper.is_subset_of(p.up(c))) {
                    join = c;
                    break;
                }
            if (join < 0) return std::nullopt;
            l.meet_[a * m + b] = l.meet_[b * m + a] = meet;
            l.join_[a * m + b] = l.join_[b * m + a] = join;
        }
    l.zero_ = *p.zero();
    l.one_ = *p.one();
    l.poset_ = std::move(p);
    return l;
}

Lattice Lattice::from_poset(Poset p) {
    auto l = try_from_poset(std::move(p));
    if (!l) throw OrderError("poset is not a lattice");
    return *std::move(l);
}

Lattice Lattice::dual() const {
    Lattice d;
    d.poset_ = poset_.dual();
    d.meet_ = join_;
    d.join_ = meet_;
    d.zero_ = one_;
    d.one_ = zero_;
    return d;
}

bool is_lattice(const Poset& p) { return Lattice::try_from_poset(p).has_value(); }

bool is_0_distributive(const Lattice& l) {
    const int m = l.size(), z = l.zero();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (l.meet(a, b) != z) continue;
            for (int c = 0; c < m; ++c)
                if (l.meet(a, c) == z && l.meet(a, l.join(b, c)) != z) return false;
        }
    return true;
}

bool is_1_distributive(const Lattice& l) {
    const int m = l.size(), o = l.one();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (l.join(a, b) != o) continue;
            for (int c = 0; c < m; ++c)
                if (l.join(a, c) == o && l.join(a, l.meet(b, c)) != o) return false;
        }
    return true;
}

// --------------------------------------------------------- chain_replace

Lattice chain_replace(const Lattice& l, int elem, const std::vector<std::string>& chain_labels) {
    const Poset& p = l.poset();
    const int m = p.size();
    if (elem < 0 || elem >= m) throw OrderError("invalid element for chain replacement");
    const int len = int(chain_labels.size());
    if (len < 1) throw OrderError("replacement chain must be nonempty");

    // New indices: old elements keep their order, the chain occupies the
    // slot of the replaced element.
    std::vector<std::string> labels;
    labels.reserve(m - 1 + len);
    std::vector<int> old_of;  // new index -> old index, -1 for chain members
    std::vector<int> chain_pos(m - 1 + len, -1);
    for (int o = 0; o < m; ++o) {
        if (o == elem) {
            for (int c = 0; c < len; ++c) {
                chain_pos[int(labels.size())] = c;
                old_of.push_back(-1);
                labels.push_back(chain_labels[c]);
            }
        } else {
            old_of.push_back(o);
            labels.push_back(p.label(o));
        }
    }

    auto leq = [&](int a, int b) {
        if (a == b) return true;
        const int oa = old_of[a], ob = old_of[b];
        if (oa >= 0 && ob >= 0) return p.leq(oa, ob);
        if (oa < 0 && ob < 0) return chain_pos[a] <= chain_pos[b];
        if (oa < 0) return p.lt(elem, ob);  // whole chain below what x was below
        return p.lt(oa, elem);              // and above what x was above
    };
    return Lattice::from_poset(Poset::from_relation(std::move(labels), leq));
}

Lattice chain_replace(const Lattice& l, int elem, int chain_len) {
    if (elem < 0 || elem >= l.size()) throw OrderError("invalid element for chain replacement");
    if (chain_len == 1) return chain_replace(l, elem, {l.label(elem)});
    std::vector<std::string> labels;
    for (int c = 0; c < chain_len; ++c)
        labels.push_back(l.label(elem) + "/" + std::to_string(c + 1));
    return chain_replace(l, elem, labels);
}

// --------------------------------------------------- the class lattices

Lattice build_boolean_vlattice(int q, int n) {
    if (!Field::supported(q)) throw UnsupportedCardinality(q);
    if (n < 1 || n > 20) throw OrderError("dimension out of range");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::pair(__builtin_popcount(a), a) < std::pair(__builtin_popcount(b), b);
    });
    std::vector<std::string> labels;
    for (auto mask : masks) labels.push_back(IndexSet{mask}.label());
    return Lattice::from_poset(Poset::from_relation(
        std::move(labels), [&](int a, int b) { return (masks[a] & ~masks[b]) == 0; }));
}

Lattice build_l_lattice(int q, int n) {
    auto classes = partition_classes(q, n);
    const std::uint32_t full = IndexSet::full(n).bits;

    std::vector<std::string> labels;
    std::vector<std::uint32_t> mask_of;
    std::vector<int> pos_of;
    labels.push_back("0");
    mask_of.push_back(0);
    pos_of.push_back(0);

    std::vector<IndexSet> keys;
    for (const auto& [key, members] : classes)
        if (!key.is_empty() && key.bits != full) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](IndexSet a, IndexSet b) {
        return std::pair(a.count(), a.bits) < std::pair(b.count(), b.bits);
    });
    for (const auto& key : keys) {
        int pos = 0;
        for (const auto& v : classes.at(key)) {
            labels.push_back(vector_label(v));
            mask_of.push_back(key.bits);
            pos_of.push_back(pos++);
        }
    }
    labels.push_back("1");
    mask_of.push_back(full);
    pos_of.push_back(0);
    const int bottom = 0, top = int(labels.size()) - 1;

    auto leq = [&](int a, int b) {
        if (a == b) return true;
        if (a == bottom || b == top) return true;
        if (b == bottom || a == top) return false;
        if (mask_of[a] == mask_of[b]) return pos_of[a] <= pos_of[b];
        return (mask_of[a] & ~mask_of[b]) == 0;
    };
    return Lattice::from_poset(Poset::from_relation(std::move(labels), leq));
}

// ----------------------------------------------- exhaustive small corpus

namespace {

// Canonical form of a relation matrix under vertex permutation.
std::string canonical_relation(const std::vector<Bitset>& down, int m) {
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::string best;
    do {
        std::string s(std::size_t(m) * m, '0');
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (down[perm[j]].test(perm[i])) s[i * m + j] = '1';
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Grow naturally-labelled posets one maximal element at a time; the new
// element's strict down-set must be an ideal of the current poset.
void grow_posets(std::vector<Bitset>& down, int count, int max_size,
                 const std::function<void(const std::vector<Bitset>&, int)>& emit) {
    emit(down, count);
    if (count == max_size) return;
    const int next = count;
    for (std::uint32_t d = 0; d < (std::uint32_t{1} << count); ++d) {
        bool ideal = true;
        for (int x = 0; x < count && ideal; ++x) {
            if (!((d >> x) & 1)) continue;
            for (int y = down[x].find_first(); y >= 0; y = down[x].find_next(y))
                if (!((d >> y) & 1)) {
                    ideal = false;
                    break;
                }
        }
        if (!ideal) continue;
        down.emplace_back(max_size);
        for (int x = 0; x < count; ++x)
            if ((d >> x) & 1) down[next] |= down[x], down[next].set(x);
        down[next].set(next);
        grow_posets(down, count + 1, max_size, emit);
        down.pop_back();
    }
}

} // namespace

std::vector<Lattice> all_lattices_up_to(int max_size) {
    if (max_size < 1 || max_size > 7) throw CapExceeded("lattice corpus supports sizes 1..7");

    std::vector<std::pair<std::string, Lattice>> found;
    std::set<std::string> seen;
    auto emit = [&](const std::vector<Bitset>& down, int m) {
        if (m == 0) return;
        // Cheap rejects before the full lattice check: unique top and bottom.
        int maximal = 0, minimal = 0;
        for (int i = 0; i < m; ++i) {
            bool is_max = true, is_min = down[i].count() == 1;
            for (int j = 0; j < m && is_max; ++j)
                if (j != i && down[j].test(i)) is_max = false;
            maximal += is_max;
            minimal += is_min;
        }
        if (maximal != 1 || minimal != 1) return;

        std::vector<std::string> labels;
        for (int i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i));
        auto lattice = Lattice::try_from_poset(Poset::from_relation(
            std::move(labels), [&](int a, int b) { return down[b].test(a); }));
        if (!lattice) return;
        auto canon = canonical_relation(down, m);
        if (seen.insert(canon).second)
            found.emplace_back(std::to_string(m) + "|" + canon, *std::move(lattice));
    };

    std::vector<Bitset> down;
    std::function<void(const std::vector<Bitset>&, int)> emit_fn = emit;
    grow_posets(down, 0, max_size, emit_fn);

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Lattice> out;
    out.reserve(found.size());
    for (auto& [key, l] : found) out.push_back(std::move(l));
    return out;
}

} // namespace skelgraph
