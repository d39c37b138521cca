#include "doctest.h"

#include "helpers.hpp"
#include "qenum/errors.hpp"

using namespace qenum;
using qtest::bpoly;

namespace {

// Third, fully dense route: evaluate the defining trace sums with explicit
// operator matrices and matrix products.  Slow but independent of both
// library routes.
EnumeratorSet dense_route(const StabilizerCode& code) {
    const auto& spec = code.spec();
    const unsigned p = static_cast<unsigned>(spec->p());
    const int n = code.n();
    const long K = code.K();
    const CMatrix& P = code.projector();
    const CycloNumber zero = CycloNumber::from_rational(Rational(0), p);

    EnumeratorSet es;
    es.spec = spec;
    es.n = n;
    es.K = Rational(K);
    es.B.assign(n + 1, zero);
    es.Bperp.assign(n + 1, zero);
    es.C.assign(static_cast<std::size_t>(n + 1) * (n + 1), zero);
    es.Cperp.assign(static_cast<std::size_t>(n + 1) * (n + 1), zero);

    const Rational unprimed(1, static_cast<long>(p) * K * K);
    const Rational primed(1, static_cast<long>(p) * K);
    for (const ErrorLabel& e : enumerate_errors(spec, n)) {
        CMatrix E = operator_matrix(e);
        CycloNumber num = (E.dagger() * P).trace() * (E * P).trace() * unprimed;
        CycloNumber nump = (E.dagger() * P * E * P).trace() * primed;
        WeightTriple wt = weights(e);
        IndexMatrix j = index_matrix(e);
        es.B[wt.swt] += num;
        es.Bperp[wt.swt] += nump;
        es.C[wt.wx * (n + 1) + wt.wz] += num;
        es.Cperp[wt.wx * (n + 1) + wt.wz] += nump;
        auto di = es.D.try_emplace(j, zero).first;
        di->second += num;
        auto dpi = es.Dperp.try_emplace(j, zero).first;
        dpi->second += nump;
    }
    for (auto it = es.D.begin(); it != es.D.end();)
        it = it->second.is_zero() ? es.D.erase(it) : std::next(it);
    for (auto it = es.Dperp.begin(); it != es.Dperp.end();)
        it = it->second.is_zero() ? es.Dperp.erase(it) : std::next(it);
    return es;
}

} // namespace

TEST_CASE("code parsing") {
    StabilizerCode bell = corpus_code("bell2");
    CHECK(bell.spec()->q() == 2);
    CHECK(bell.n() == 2);
    CHECK(bell.K() == 1);
    CHECK(bell.generators().size() == 2);
    CHECK(bell.group().size() == 4);
    for (const PhasedLabel& s : bell.group()) CHECK(s.k == 0);

    StabilizerCode xx = corpus_code("xx2");
    CHECK(xx.K() == 2);
    CHECK(xx.group().size() == 2);

    StabilizerCode rep = corpus_code("rep3");
    CHECK(rep.n() == 3);
    CHECK(rep.K() == 2);
    CHECK(rep.group().size() == 4);
    for (const PhasedLabel& s : rep.group())
        CHECK(s.a == std::vector<int>{0, 0, 0});

    StabilizerCode z5 = corpus_code("z5");
    CHECK(z5.spec()->q() == 5);
    CHECK(z5.K() == 1);
    CHECK(z5.group().size() == 5);

    StabilizerCode x4 = corpus_code("x4");
    CHECK(x4.spec()->q() == 4);
    CHECK(x4.spec()->s() == 2);
    CHECK(x4.K() == 2);
}

TEST_CASE("comments and layout are tolerated") {
    StabilizerCode c = StabilizerCode::parse(
        "# a Bell pair\nq 2\n\nn 2\ngen 1 1 | 0 0   # XX\ngen 0 0 | 1 1\n");
    CHECK(c.K() == 1);

    StabilizerCode ext = StabilizerCode::parse("q 4\nmodulus 1 1 1\nn 1\ngen 1 | 0\n");
    CHECK(ext.spec()->q() == 4);
}

TEST_CASE("parse failures carry positions") {
    CHECK_THROWS_AS(StabilizerCode::parse(""), parse_error);
    CHECK_THROWS_AS(StabilizerCode::parse("n 2\nq 2\n"), parse_error);
    CHECK_THROWS_AS(StabilizerCode::parse("q 2\nn 2\ngen 1 1 0 0\n"), parse_error);
    CHECK_THROWS_AS(StabilizerCode::parse("q 2\nn 2\ngen 1 2 | 0 0\n"), parse_error);
    CHECK_THROWS_AS(StabilizerCode::parse("q 2\nn 0\n"), parse_error);
    CHECK_THROWS_AS(StabilizerCode::parse("q 2\nn 2\ngen 1 | 0\n"), parse_error);
    CHECK_THROWS_AS(StabilizerCode::parse("q 6\nn 1\ngen 1 | 0\n"), parse_error);
    try {
        StabilizerCode::parse("q 2\nn 1\ngen 1 | 0\ngen 0 | 1\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line == 4); // the generator that breaks commutation
    }
}

TEST_CASE("phase-inconsistent closures are rejected") {
    // X Z on one system squares to a nontrivial multiple of the identity.
    CHECK_THROWS_AS(StabilizerCode::parse("q 2\nn 1\ngen 1 | 1\n"), input_error);
}

TEST_CASE("projector is an orthogonal projector of rank K") {
    for (const char* name : {"bell2", "xx2", "bell3", "z5"}) {
        StabilizerCode code = corpus_code(name);
        const CMatrix& P = code.projector();
        CHECK(P * P == P);
        CHECK(P.dagger() == P);
        CHECK(P.trace() ==
              CycloNumber::from_rational(Rational(code.K()),
                                         static_cast<unsigned>(code.spec()->p())));
    }
}

TEST_CASE("projector respects the budget") {
    StabilizerCode rep = corpus_code("rep3");
    CHECK_THROWS_AS(rep.projector(10), budget_error);
    StabilizerCode bell = corpus_code("bell2");
    CHECK_THROWS_AS(distributions_oracle(bell, 8), budget_error);
}

TEST_CASE("oracle and symplectic routes agree with the dense route") {
    for (const char* name : {"bell2", "xx2", "trivial1-q3"}) {
        StabilizerCode code = corpus_code(name);
        EnumeratorSet dense = dense_route(code);
        CHECK(distributions_oracle(code) == dense);
        CHECK(distributions_symplectic(code) == dense);
    }
}

TEST_CASE("distribution normalizations") {
    for (const CorpusEntry& entry : corpus()) {
        StabilizerCode code = corpus_code(entry.name);
        EnumeratorSet es = distributions_symplectic(code);
        const long p = code.spec()->p();
        CHECK(es.B[0] == CycloNumber::from_rational(Rational(1, p),
                                                    static_cast<unsigned>(p)));
        CHECK(es.all_rational_nonneg());

        long qn = 1;
        for (int i = 0; i < code.n(); ++i) qn *= code.spec()->q();
        CycloNumber bsum = CycloNumber::from_rational(Rational(0), static_cast<unsigned>(p));
        CycloNumber bpsum = bsum;
        for (const auto& v : es.B) bsum += v;
        for (const auto& v : es.Bperp) bpsum += v;
        // sum B_i = |L|/p = q^n/(pK);  sum Bperp_i = |Lperp|/p = K*q^n/p
        CHECK(bsum == CycloNumber::from_rational(Rational(qn) / (es.K * p),
                                                 static_cast<unsigned>(p)));
        CHECK(bpsum == CycloNumber::from_rational(Rational(qn) * es.K / p,
                                                  static_cast<unsigned>(p)));
    }
}

TEST_CASE("enumerator polynomials and specializations") {
    for (const char* name : {"bell2", "rep3", "bell3", "z5", "x4"}) {
        StabilizerCode code = corpus_code(name);
        EnumeratorSet es = distributions_symplectic(code);
        const int q = code.spec()->q();
        for (Kind dk : {Kind::D, Kind::Dperp}) {
            Kind bk = dk == Kind::D ? Kind::B : Kind::Bperp;
            Kind ck = dk == Kind::D ? Kind::C : Kind::Cperp;
            MultiPoly d = enumerator_poly(es, dk);
            CHECK(specialize_D_to_B(d, q) == enumerator_poly(es, bk));
            CHECK(specialize_D_to_C(d, q) == enumerator_poly(es, ck));
        }
    }
}

TEST_CASE("frozen enumerators") {
    EnumeratorSet bell = distributions_symplectic(corpus_code("bell2"));
    CHECK(enumerator_poly(bell, Kind::B) == bpoly("1/2*x^2 + 3/2*y^2"));
    CHECK(enumerator_poly(bell, Kind::Bperp) == bpoly("1/2*x^2 + 3/2*y^2"));

    EnumeratorSet xx = distributions_symplectic(corpus_code("xx2"));
    CHECK(enumerator_poly(xx, Kind::B) == bpoly("1/2*x^2 + 1/2*y^2"));
    CHECK(enumerator_poly(xx, Kind::Bperp) == bpoly("1/2*x^2 + x*y + 5/2*y^2"));

    EnumeratorSet rep = distributions_symplectic(corpus_code("rep3"));
    CHECK(enumerator_poly(rep, Kind::B) == bpoly("1/2*x^3 + 3/2*x*y^2"));
    CHECK(enumerator_poly(rep, Kind::Bperp) ==
          bpoly("1/2*x^3 + 3/2*x^2*y + 3/2*x*y^2 + 9/2*y^3"));

    EnumeratorSet z5 = distributions_symplectic(corpus_code("z5"));
    CHECK(enumerator_poly(z5, Kind::B) == bpoly("1/5*x + 4/5*y"));
    CHECK(enumerator_poly(z5, Kind::D) ==
          qtest::dpoly("1/5*M_0_0 + 1/5*M_0_1 + 1/5*M_0_2 + 1/5*M_0_3 + 1/5*M_0_4", 5));
}

TEST_CASE("corpus entries are consistent") {
    CHECK(corpus().size() >= 6);
    for (const CorpusEntry& entry : corpus()) {
        StabilizerCode code = corpus_code(entry.name);
        CHECK(code.K() == entry.K);
    }
    CHECK_THROWS_AS(corpus_entry("nope"), input_error);
}
