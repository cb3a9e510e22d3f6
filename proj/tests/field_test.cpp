#include <doctest.h>

#include "skelgraph/field.hpp"

using namespace skelgraph;

TEST_CASE("every supported field satisfies the field axioms exhaustively") {
    for (int q : Field::supported_cardinalities()) {
        CAPTURE(q);
        Field f = Field::make(q);
        CHECK(f.q() == q);
        int p = f.characteristic(), k = f.degree();
        int pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        CHECK(pk == q);

        bool ok = true;
        for (int a = 0; a < q && ok; ++a) {
            ok = ok && f.add(a, 0) == a && f.mul(a, 1) == a && f.mul(a, 0) == 0;
            ok = ok && f.add(a, f.neg(a)) == 0;
            if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1;
            for (int b = 0; b < q && ok; ++b) {
                ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                for (int c = 0; c < q && ok; ++c) {
                    ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                    ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("prime field arithmetic is plain modular arithmetic") {
    Field f3 = Field::make(3);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.inv(2) == 2);
    Field f2 = Field::make(2);
    CHECK(f2.mul(1, 1) == 1);
    CHECK(f2.add(1, 1) == 0);
}

TEST_CASE("extension fields follow their fixed moduli") {
    // Indices are c0 + c1*p + c2*p^2 for the element c0 + c1*x + c2*x^2.
    SUBCASE("GF(4), x^2+x+1: x*x = x+1") {
        Field f = Field::make(4);
        CHECK(f.mul(2, 2) == 3);
        CHECK(f.mul(2, 3) == 1);  // x(x+1) = x^2+x = 1
        CHECK(f.mul(3, 3) == 2);  // (x+1)^2 = x
        CHECK(f.add(2, 3) == 1);
        CHECK(f.inv(2) == 3);
    }
    SUBCASE("GF(8), x^3+x+1: x^2 * x = x+1") { CHECK(Field::make(8).mul(4, 2) == 3); }
    SUBCASE("GF(9), x^2+1: x*x = 2") { CHECK(Field::make(9).mul(3, 3) == 2); }
    SUBCASE("GF(16), x^4+x+1: x^3 * x = x+1") { CHECK(Field::make(16).mul(8, 2) == 3); }
    SUBCASE("GF(25), x^2+2: x*x = 3") { CHECK(Field::make(25).mul(5, 5) == 3); }
    SUBCASE("GF(27), x^3+2x+1: x^2 * x = x+2") { CHECK(Field::make(27).mul(9, 3) == 5); }
}

TEST_CASE("construction is deterministic") {
    for (int q : {4, 9, 27}) {
        Field a = Field::make(q), b = Field::make(q);
        bool same = true;
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y)
                same = same && a.add(x, y) == b.add(x, y) && a.mul(x, y) == b.mul(x, y);
        CHECK(same);
    }
}

TEST_CASE("unsupported cardinalities are rejected") {
    for (int q : {6, 12, 0, -5, 32, 49})
        CHECK_THROWS_AS(Field::make(q), UnsupportedCardinality);
}

TEST_CASE("zero has no inverse") { CHECK_THROWS_AS(Field::make(5).inv(0), Error); }
