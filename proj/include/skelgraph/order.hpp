#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skelgraph/bitset.hpp"
#include "skelgraph/errors.hpp"
#include "skelgraph/index_set.hpp"

namespace skelgraph {

/// Finite poset with labelled elements and an explicit order relation.
/// Construction checks reflexivity, antisymmetry and transitivity and
/// locates the least/greatest elements if present. The full relation is
/// stored (down-sets and up-sets as bitset rows); the cover relation is
/// derived on demand.
class Poset {
public:
    Poset() = default;  // the empty poset

    /// From the complete list of related pairs (i,j) meaning i <= j.
    /// Reflexive pairs may be omitted; they are implied.
    Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& leq_pairs);

    /// From a predicate giving the full relation.
    template <typename Leq>
    static Poset from_relation(std::vector<std::string> labels, Leq&& leq) {
        const int m = int(labels.size());
        std::vector<Bitset> up(m, Bitset(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (leq(i, j)) up[i].set(j);
        return Poset(std::move(labels), std::move(up));
    }

    int size() const { return int(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const;  // throws if absent

    bool leq(int a, int b) const { return up_[a].test(b); }
    bool lt(int a, int b) const { return a != b && leq(a, b); }

    /// { x : x <= a } and { x : a <= x } as bitsets.
    const Bitset& down(int a) const { return down_[a]; }
    const Bitset& up(int a) const { return up_[a]; }

    std::optional<int> zero() const { return zero_; }
    std::optional<int> one() const { return one_; }
    int require_zero() const;
    int require_one() const;

    /// A^l = { b : b <= a for all a in A }; throws on empty A.
    Bitset lower_cone(std::span<const int> a) const;
    Bitset upper_cone(std::span<const int> a) const;
    Bitset lower_cone(int a, int b) const { return down_[a] & down_[b]; }

    /// Hasse diagram as (lower, upper) pairs.
    std::vector<std::pair<int, int>> cover_pairs() const;

    /// Same elements, order reversed.
    Poset dual() const;

private:
    Poset(std::vector<std::string> labels, std::vector<Bitset> up);
    void validate_and_finish();

    std::vector<std::string> labels_;
    std::vector<Bitset> up_, down_;
    std::optional<int> zero_, one_;
};

/// Z(P) = { a : {a,b}^l = {0} for some b != 0 }, as a bitset. Requires 0.
Bitset zero_divisors(const Poset& p);

/// Z(P) \ {0}: the vertex set of the zero-divisor graph.
std::vector<int> zdg_vertex_set(const Poset& p);

/// The dense elements D = P \ Z(P).
Bitset dense_elements(const Poset& p);

/// a^perp = { x : {a,x}^l = {0} }. Requires 0.
Bitset annihilator(const Poset& p, int a);

/// Elements covering 0. Requires 0.
std::vector<int> atoms(const Poset& p);

/// {a,b}^l = {0} and {a,c}^l = {0} imply {a, {b,c}^u}^l = {0}, checked
/// over all triples. Poset form; requires 0 (dually 1).
bool is_0_distributive(const Poset& p);
bool is_1_distributive(const Poset& p);

/// One class per distinct atom signature, zero's class first.
struct AtomClass {
    IndexSet key;              // positions in atoms(p), 1-based
    std::vector<int> members;  // element indices of p
};

/// Partition of P \ {0} by the set of atoms below each element, sorted by
/// (|key|, key). Every nonzero element lies above an atom, so keys are
/// nonempty. Requires 0.
std::vector<AtomClass> atom_partition(const Poset& p);

/// The compressed poset [P]: atom-partition classes plus the bottom class
/// {0}, ordered by inclusion of atom signatures. Class labels are the key
/// labels "{...}"; the bottom class is "{}".
struct CompressedPoset {
    Poset quotient;
    std::vector<IndexSet> keys;             // keys[c] of quotient element c
    std::vector<std::vector<int>> members;  // original element indices
    std::vector<int> class_of;              // original element -> class
};

CompressedPoset compress(const Poset& p);

/// Whether p is order-isomorphic to the power set of its atom set: the
/// atom-signature map is bijective onto all 2^k subsets and order agrees
/// with inclusion.
bool is_boolean_lattice(const Poset& p);

/// Poset that is a lattice: every pair has a unique meet and join.
class Lattice {
public:
    static Lattice from_poset(Poset p);                 // throws OrderError
    static std::optional<Lattice> try_from_poset(Poset p);

    const Poset& poset() const { return poset_; }
    int size() const { return poset_.size(); }
    const std::string& label(int i) const { return poset_.label(i); }

    int meet(int a, int b) const { return meet_[a * size() + b]; }
    int join(int a, int b) const { return join_[a * size() + b]; }
    int zero() const { return zero_; }
    int one() const { return one_; }

    /// Order reversed, meet and join swapped, 0 and 1 swapped.
    Lattice dual() const;

private:
    Lattice() = default;
    Poset poset_;
    std::vector<int> meet_, join_;
    int zero_ = 0, one_ = 0;
};

bool is_lattice(const Poset& p);

/// Meet/join forms of 0- and 1-distributivity (agree with the poset forms
/// on lattices).
bool is_0_distributive(const Lattice& l);
bool is_1_distributive(const Lattice& l);

/// Replace an element by a bounded chain: the chain's minimum takes the
/// element's strictly-below relations, the maximum its strictly-above
/// relations, and interior members sit between. The result is again a
/// lattice, verified on construction.
Lattice chain_replace(const Lattice& l, int elem, const std::vector<std::string>& chain_labels);
Lattice chain_replace(const Lattice& l, int elem, int chain_len);

/// The Boolean lattice of skeleton classes V_I, I a subset of {1,...,n},
/// ordered by inclusion; meet and join are intersection and union.
Lattice build_boolean_vlattice(int q, int n);

/// The lattice obtained from the class lattice by replacing every proper
/// nonempty class V_I with the chain of its (q-1)^|I| vectors in
/// lexicographic order, and the extreme classes by bottom "0" / top "1".
/// 0- and 1-distributive by construction.
Lattice build_l_lattice(int q, int n);

/// All lattices with at most max_size elements, one per isomorphism
/// class, generated exhaustively. max_size <= 7 keeps this instant.
std::vector<Lattice> all_lattices_up_to(int max_size);

} // namespace skelgraph
