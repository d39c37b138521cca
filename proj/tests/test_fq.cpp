#include "doctest.h"

#include "qenum/errors.hpp"
#include "qenum/fq.hpp"

using namespace qenum;

TEST_CASE("prime fields") {
    auto f5 = FieldSpec::make(5);
    CHECK(f5->p() == 5);
    CHECK(f5->s() == 1);
    CHECK(f5->q() == 5);
    CHECK(f5->modulus().empty());
    CHECK(f5->add(3, 4) == 2);
    CHECK(f5->sub(1, 3) == 3);
    CHECK(f5->neg(2) == 3);
    CHECK(f5->mul(3, 4) == 2);
    CHECK(f5->inv(2) == 3);
    CHECK(f5->div(1, 4) == 4);
    for (int a = 0; a < 5; ++a) CHECK(f5->trace(a) == a);
    CHECK_THROWS_AS(f5->inv(0), error);
}

TEST_CASE("field of order four") {
    auto f4 = FieldSpec::make(4); // t^2 + t + 1
    CHECK(f4->p() == 2);
    CHECK(f4->s() == 2);
    // element 2 = t, element 3 = t + 1
    CHECK(f4->mul(2, 2) == 3); // t^2 = t + 1
    CHECK(f4->mul(2, 3) == 1); // t(t+1) = t^2 + t = 1
    CHECK(f4->inv(2) == 3);
    CHECK(f4->add(2, 3) == 1);
    CHECK(f4->neg(2) == 2); // characteristic 2
    // Tr(a) = a + a^2: Tr(0) = 0, Tr(1) = 0, Tr(t) = 1, Tr(t+1) = 1
    CHECK(f4->trace(0) == 0);
    CHECK(f4->trace(1) == 0);
    CHECK(f4->trace(2) == 1);
    CHECK(f4->trace(3) == 1);
}

TEST_CASE("field of order nine") {
    auto f9 = FieldSpec::make(9); // t^2 + 1
    CHECK(f9->p() == 3);
    CHECK(f9->s() == 2);
    // element index = c0 + 3*c1, so t has index 3
    CHECK(f9->mul(3, 3) == 2); // t^2 = -1 = 2
    CHECK(f9->mul(3, 2) == 6); // 2t has coeffs (0,2) -> index 6
    // Tr(a) = a + a^3; Tr(t) = t + t^3 = t - t = 0, Tr(1) = 2
    CHECK(f9->trace(3) == 0);
    CHECK(f9->trace(1) == 2);
    CHECK(f9->trace(0) == 0);
    // Multiplicative group order 8: check a generator's powers are distinct.
    int x = 3 + 1; // t + 1
    int acc = 1;
    std::vector<bool> seen(9, false);
    for (int k = 0; k < 8; ++k) {
        acc = f9->mul(acc, x);
        CHECK_FALSE(seen[acc]);
        seen[acc] = true;
    }
    CHECK(acc == 1); // full order
}

TEST_CASE("field of order eight") {
    auto f8 = FieldSpec::make(8); // t^3 + t + 1
    CHECK(f8->p() == 2);
    CHECK(f8->s() == 3);
    // t has index 2; t^3 = t + 1 -> index 3
    CHECK(f8->mul(2, f8->mul(2, 2)) == 3);
    // Every nonzero element has an inverse.
    for (int a = 1; a < 8; ++a) CHECK(f8->mul(a, f8->inv(a)) == 1);
}

TEST_CASE("coefficient vectors round trip") {
    auto f9 = FieldSpec::make(9);
    for (int a = 0; a < 9; ++a) {
        auto c = f9->coeffs(a);
        CHECK(static_cast<int>(c.size()) == 2);
        CHECK(f9->index_of_coeffs(c) == a);
    }
    CHECK(f9->coeffs(5) == std::vector<int>{2, 1});
    auto f3 = FieldSpec::make(3);
    CHECK(f3->coeffs(2) == std::vector<int>{2});
}

TEST_CASE("trace is F_p-linear and surjective") {
    for (int q : {2, 3, 4, 5, 8, 9}) {
        auto f = FieldSpec::make(q);
        const int p = f->p();
        bool nonzero = false;
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                int lhs = f->trace(f->add(a, b));
                int rhs = (f->trace(a) + f->trace(b)) % p;
                CHECK(lhs == rhs);
            }
            if (f->trace(a) != 0) nonzero = true;
        }
        CHECK(nonzero);
    }
}

TEST_CASE("custom modulus") {
    auto alt = FieldSpec::make(9, {2, 1, 1}); // t^2 + t + 2, also irreducible mod 3
    CHECK(alt->mul(3, 3) == alt->index_of_coeffs({1, 2})); // t^2 = -t - 2 = 2t + 1
    CHECK_FALSE(*alt == *FieldSpec::make(9));
    CHECK(*FieldSpec::make(4) == *FieldSpec::make(4, {1, 1, 1}));
    CHECK_THROWS_AS(FieldSpec::make(9, {1, 0, 2}), input_error);   // not monic
    CHECK_THROWS_AS(FieldSpec::make(9, {0, 0, 1}), input_error);   // reducible
    CHECK_THROWS_AS(FieldSpec::make(9, {1, 1}), input_error);      // wrong degree
    CHECK_THROWS_AS(FieldSpec::make(5, {1, 1}), input_error);      // prime field
}

TEST_CASE("unsupported orders are rejected") {
    CHECK_THROWS_AS(FieldSpec::make(6), input_error);
    CHECK_THROWS_AS(FieldSpec::make(1), input_error);
    CHECK_THROWS_AS(FieldSpec::make(0), input_error);
    CHECK_THROWS_AS(FieldSpec::make(16), input_error); // no built-in modulus
    CHECK_THROWS_AS(FieldSpec::make(-3), input_error);
}

TEST_CASE("field elements") {
    auto f4 = FieldSpec::make(4);
    FqElem t(f4, 2), u(f4, 3);
    CHECK((t * u).index() == 1);
    CHECK((t + u).index() == 1);
    CHECK((t - t).is_zero());
    CHECK((t / t).index() == 1);
    CHECK((-t) == t);
    CHECK(t != u);
    CHECK(t.trace() == 1);
    CHECK(t.coeffs() == std::vector<int>{0, 1});
}
