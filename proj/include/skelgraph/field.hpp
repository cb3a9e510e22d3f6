#pragma once

#include <string>
#include <vector>

#include "skelgraph/errors.hpp"

namespace skelgraph {

/// Arithmetic over a small finite field GF(q), q = p^k a prime power.
///
/// Elements are identified by their index into a canonical table:
/// index 0 is the additive identity and index 1 the multiplicative
/// identity. Prime fields use residues (index = residue). Extension
/// fields represent elements as polynomials c0 + c1*x + ... over GF(p),
/// reduced modulo a fixed irreducible polynomial, with index
/// c0 + c1*p + c2*p^2 + ... Two constructions with the same q always
/// produce identical tables.
///
/// Supported q: 2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27.
/// Moduli for the extension fields:
///   GF(4): x^2+x+1    GF(8): x^3+x+1     GF(9):  x^2+1
///   GF(16): x^4+x+1   GF(25): x^2+2      GF(27): x^3+2x+1
class Field {
public:
    static Field make(int q);  // throws UnsupportedCardinality
    static bool supported(int q);
    static const std::vector<int>& supported_cardinalities();

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return k_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const;  // throws Error on a == 0

    static constexpr int zero() { return 0; }
    static constexpr int one() { return 1; }

private:
    Field() = default;

    int q_ = 0, p_ = 0, k_ = 0;
    std::vector<int> add_, mul_, neg_, inv_;
};

} // namespace skelgraph
