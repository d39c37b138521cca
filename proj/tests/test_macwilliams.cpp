#include "doctest.h"

#include "helpers.hpp"
#include "qenum/errors.hpp"
#include "qenum/invariant.hpp"

using namespace qenum;
using qtest::bpoly;
using qtest::cpoly;
using qtest::ctx_of;
using qtest::dpoly;

TEST_CASE("weight transform on a code with distinct primed distribution") {
    StabilizerCode code = corpus_code("xx2");
    EnumeratorSet es = distributions_symplectic(code);
    TransformContext ctx = ctx_of(code, es);
    CHECK(mac_B(bpoly("1/2*x^2 + x*y + 5/2*y^2"), ctx) == bpoly("1/2*x^2 + 1/2*y^2"));
}

TEST_CASE("double transform exchanges the X and Z blocks") {
    StabilizerCode code = corpus_code("rep3");
    EnumeratorSet es = distributions_symplectic(code);
    TransformContext ctx = ctx_of(code, es);

    MultiPoly c = enumerator_poly(es, Kind::C);
    MultiPoly cperp = enumerator_poly(es, Kind::Cperp);
    CHECK(c == cpoly("1/2*x^3*z^3 + 3/2*x^3*z*w^2"));
    CHECK(cperp == cpoly("1/2*x^3*z^3 + 3/2*x^3*z^2*w + 3/2*x^3*z*w^2 + 1/2*x^3*w^3"
                         " + 1/2*y^3*z^3 + 3/2*y^3*z^2*w + 3/2*y^3*z*w^2 + 1/2*y^3*w^3"));
    CHECK(mac_C(cperp, ctx) == c);

    // The block-diagonal substitution that keeps (x,y) with (x,y) sends this
    // Cperp elsewhere; guard against regressing to it.
    MultiPoly wrong = cperp.substitute_linear(CMatrix::from_rational_rows({
                          {rational(1), rational(1), rational(0), rational(0)},
                          {rational(1), rational(-1), rational(0), rational(0)},
                          {rational(0), rational(0), rational(1, 2), rational(1, 2)},
                          {rational(0), rational(0), rational(1, 2), rational(-1, 2)},
                      })) *
                      Rational(1, 2);
    CHECK(wrong != c);
}

TEST_CASE("transforms recover the unprimed side on the whole corpus") {
    for (const CorpusEntry& entry : corpus()) {
        CAPTURE(entry.name);
        StabilizerCode code = corpus_code(entry.name);
        EnumeratorSet es = distributions_symplectic(code);
        TransformContext ctx = ctx_of(code, es);
        CHECK(mac_B(enumerator_poly(es, Kind::Bperp), ctx) == enumerator_poly(es, Kind::B));
        CHECK(mac_C(enumerator_poly(es, Kind::Cperp), ctx) == enumerator_poly(es, Kind::C));
        CHECK(mac_D(enumerator_poly(es, Kind::Dperp), ctx) == enumerator_poly(es, Kind::D));
    }
}

TEST_CASE("transforms commute with specialization") {
    for (const CorpusEntry& entry : corpus()) {
        CAPTURE(entry.name);
        StabilizerCode code = corpus_code(entry.name);
        EnumeratorSet es = distributions_symplectic(code);
        TransformContext ctx = ctx_of(code, es);
        const int q = code.spec()->q();
        MultiPoly dperp = enumerator_poly(es, Kind::Dperp);
        MultiPoly d = mac_D(dperp, ctx);
        CHECK(specialize_D_to_B(d, q) == mac_B(specialize_D_to_B(dperp, q), ctx));
        CHECK(specialize_D_to_C(d, q) == mac_C(specialize_D_to_C(dperp, q), ctx));
    }
}

TEST_CASE("transforms are involutions at K = 1") {
    TransformContext ctx{FieldSpec::make(3), 1, Rational(1)};
    MultiPoly b = bpoly("x + 7*y");
    CHECK(mac_B(mac_B(b, ctx), ctx) == b);
    MultiPoly c = cpoly("x*z + 2*x*w + 5*y*z");
    CHECK(mac_C(mac_C(c, ctx), ctx) == c);
    MultiPoly d = dpoly("M_0_0 + 3*M_1_2", 3);
    CHECK(mac_D(mac_D(d, ctx), ctx) == d);
}

TEST_CASE("dual-variable matrix") {
    CMatrix expect = CMatrix::from_rational_rows({
                         {rational(1), rational(1), rational(1), rational(1)},
                         {rational(1), rational(1), rational(-1), rational(-1)},
                         {rational(1), rational(-1), rational(1), rational(-1)},
                         {rational(1), rational(-1), rational(-1), rational(1)},
                     }) *
                     Rational(1, 2);
    CHECK(mac_dual_vars(2) == expect);

    for (int q : {2, 3, 4, 5}) {
        CAPTURE(q);
        CMatrix L = mac_dual_vars(q);
        CHECK(L.rows() == static_cast<std::size_t>(q) * q);
        CHECK(L * L == CMatrix::identity(static_cast<std::size_t>(q) * q,
                                         static_cast<unsigned>(FieldSpec::make(q)->p())));
    }

    // Unitary: the rescaled character table has orthonormal rows.
    for (int q : {2, 3}) {
        CMatrix L = mac_dual_vars(q);
        CHECK(L * L.dagger() == CMatrix::identity(static_cast<std::size_t>(q) * q,
                                                  static_cast<unsigned>(q)));
    }
}

TEST_CASE("transform input validation") {
    TransformContext ctx{FieldSpec::make(2), 2, Rational(1)};
    CHECK_THROWS_AS(mac_B(cpoly("x*z"), ctx), input_error);
    CHECK_THROWS_AS(mac_B(bpoly("x"), ctx), input_error);           // degree 1 != n
    CHECK_THROWS_AS(mac_B(bpoly("x^2 + x"), ctx), input_error);     // inhomogeneous
    CHECK_THROWS_AS(mac_C(bpoly("x^2"), ctx), input_error);
    CHECK_THROWS_AS(mac_C(cpoly("x*z"), ctx), input_error);         // bidegree (1,1) != (2,2)
    CHECK_THROWS_AS(mac_C(cpoly("x^2*z^2 + x^2*z*y"), ctx), input_error); // z,w-degree 1 in term 2
    CHECK_FALSE(mac_C(cpoly("x^2*z*w + x*y*z^2"), ctx).is_zero());  // mixed rows are fine
    CHECK_THROWS_AS(mac_D(dpoly("M_0_0", 3), ctx), input_error);    // wrong variable set
    CHECK_THROWS_AS(mac_D(dpoly("M_0_0", 2), ctx), input_error);    // degree 1 != n
    CHECK(mac_D(dpoly("M_0_0^2", 2), ctx) == dpoly("1/4*M_0_0^2 + 1/2*M_0_0*M_0_1 + 1/2*M_0_0*M_1_0"
                                                   " + 1/2*M_0_0*M_1_1 + 1/4*M_0_1^2 + 1/2*M_0_1*M_1_0"
                                                   " + 1/2*M_0_1*M_1_1 + 1/4*M_1_0^2 + 1/2*M_1_0*M_1_1"
                                                   " + 1/4*M_1_1^2", 2));
}

TEST_CASE("formal self-duality flags match the corpus") {
    for (const CorpusEntry& entry : corpus()) {
        CAPTURE(entry.name);
        StabilizerCode code = corpus_code(entry.name);
        CHECK(check_formally_self_dual(code) == entry.self_dual);
        CHECK(check_formally_self_dual(distributions_symplectic(code)) == entry.self_dual);
    }
}

TEST_CASE("inconsistent distribution sets are surfaced, not absorbed") {
    EnumeratorSet es = distributions_symplectic(corpus_code("bell2"));
    EnumeratorSet broken = es;
    broken.B[2] += CycloNumber::from_rational(Rational(1), 2);
    // D still says self-dual, but B now disagrees: that is a bug, not a result.
    CHECK_THROWS_AS(check_formally_self_dual(broken), error);

    EnumeratorSet scaled = es;
    for (auto& [j, v] : scaled.Dperp) v = v * Rational(2);
    CHECK_FALSE(check_formally_self_dual(scaled)); // clean "not self-dual"
}
