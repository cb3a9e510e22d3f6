#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace skelgraph {

/// A subset of {1,...,n} stored as a bitmask (bit i-1 <-> member i).
/// Used as skeleton of a vector, atom signature of a poset element, and
/// partition key throughout.
struct IndexSet {
    std::uint32_t bits = 0;

    static IndexSet empty() { return {}; }
    static IndexSet full(int n) { return {n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1}; }

    bool contains(int i) const { return (bits >> (i - 1)) & 1; }
    IndexSet& add(int i) { bits |= std::uint32_t{1} << (i - 1); return *this; }

    int count() const { return __builtin_popcount(bits); }
    bool is_empty() const { return bits == 0; }

    bool subset_of(IndexSet o) const { return (bits & ~o.bits) == 0; }
    bool intersects(IndexSet o) const { return (bits & o.bits) != 0; }
    IndexSet intersect(IndexSet o) const { return {bits & o.bits}; }
    IndexSet unite(IndexSet o) const { return {bits | o.bits}; }

    auto operator<=>(const IndexSet&) const = default;

    /// "{1,3}" for {1,3}, "{}" for the empty set.
    std::string label() const {
        std::string s = "{";
        bool first = true;
        for (int i = 1; i <= 32; ++i) {
            if (!contains(i)) continue;
            if (!first) s += ',';
            s += std::to_string(i);
            first = false;
        }
        s += '}';
        return s;
    }
};

} // namespace skelgraph
