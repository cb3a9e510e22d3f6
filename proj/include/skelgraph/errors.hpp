#pragma once

#include <stdexcept>
#include <string>

namespace skelgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested field cardinality is not in the supported table.
struct UnsupportedCardinality : Error {
    explicit UnsupportedCardinality(int q)
        : Error("unsupported field cardinality " + std::to_string(q) +
                "; supported: 2,3,4,5,7,8,9,11,13,16,25,27") {}
};

/// An exact search was asked to run on an instance above its configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// Violation of an order-theoretic precondition (missing 0/1, not a lattice, ...).
struct OrderError : Error {
    using Error::Error;
};

} // namespace skelgraph
