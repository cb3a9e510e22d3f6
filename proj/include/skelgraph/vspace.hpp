#pragma once

#include <map>
#include <string>
#include <vector>

#include "skelgraph/field.hpp"
#include "skelgraph/graph.hpp"
#include "skelgraph/index_set.hpp"

namespace skelgraph {

/// A vector of F^n as the tuple of its coordinates in the standard basis,
/// each coordinate a canonical field-element index.
using Vec = std::vector<int>;

/// "1,0,2" — coordinates joined by commas. Used as the vertex label of
/// the vector everywhere, so graphs built from the same space agree on
/// labels.
std::string vector_label(const Vec& v);

/// Indices of the nonzero coordinates; empty exactly for the zero vector.
IndexSet skeleton(const Vec& v);

/// All q^n tuples in lexicographic order (first coordinate most
/// significant), optionally without the zero vector.
std::vector<Vec> enumerate_vectors(int q, int n, bool include_zero);

/// The partition of F^n by skeleton: every subset of {1,...,n} is a key,
/// the empty set maps to {0}, and the class of I has (q-1)^|I| vectors.
std::map<IndexSet, std::vector<Vec>> partition_classes(int q, int n);

/// Component graph: nonzero vectors, adjacent when skeletons intersect.
Graph build_ig(int q, int n);

/// Component union graph: nonzero vectors, adjacent when the two
/// skeletons together cover {1,...,n}.
Graph build_ug(int q, int n);

} // namespace skelgraph
