#include "qenum/macwilliams.hpp"

#include "qenum/errors.hpp"

#include <set>

namespace qenum {

namespace {

void require_vars(const MultiPoly& f, const std::vector<std::string>& want,
                  const char* which) {
    if (f.vars() != want)
        throw input_error(std::string(which) +
                          " transform needs a polynomial in the standard variables");
}

void require_degree(const MultiPoly& f, int n, const char* which) {
    if (f.is_zero()) return;
    if (!f.is_homogeneous() || f.total_degree() != n)
        throw input_error(std::string(which) + " transform needs a homogeneous polynomial of degree " +
                          std::to_string(n));
}

} // namespace

MultiPoly mac_B(const MultiPoly& f, const TransformContext& ctx) {
    require_vars(f, {"x", "y"}, "B");
    require_degree(f, ctx.n, "B");
    const long q = ctx.spec->q();
    CMatrix g = CMatrix::from_rational_rows({
        {rational(1), rational(q * q - 1)},
        {rational(1), rational(-1)},
    });
    Rational scale = Rational(1) / (rational_pow(rational(q), ctx.n) * ctx.K);
    return f.substitute_linear(g) * scale;
}

MultiPoly mac_C(const MultiPoly& f, const TransformContext& ctx) {
    require_vars(f, {"x", "y", "z", "w"}, "C");
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        if (m[0] + m[1] != static_cast<unsigned>(ctx.n) ||
            m[2] + m[3] != static_cast<unsigned>(ctx.n))
            throw input_error("C transform needs bidegree (" + std::to_string(ctx.n) + ", " +
                              std::to_string(ctx.n) + ") in (x,y) and (z,w)");
    }
    const long q = ctx.spec->q();
    // x <- z+(q-1)w, y <- z-w, z <- (x+(q-1)y)/q, w <- (x-y)/q
    CMatrix g = CMatrix::from_rational_rows({
        {rational(0), rational(0), rational(1), rational(q - 1)},
        {rational(0), rational(0), rational(1), rational(-1)},
        {rational(1, q), rational(q - 1, q), rational(0), rational(0)},
        {rational(1, q), rational(-1, q), rational(0), rational(0)},
    });
    return f.substitute_linear(g) * (Rational(1) / ctx.K);
}

CMatrix mac_dual_vars(const FieldSpec& f) {
    const int q = f.q();
    const unsigned p = static_cast<unsigned>(f.p());
    CMatrix L(static_cast<std::size_t>(q) * q, static_cast<std::size_t>(q) * q, p);
    const Rational inv_q(1, q);
    for (int lp = 0; lp < q; ++lp)
        for (int mp = 0; mp < q; ++mp)
            for (int l = 0; l < q; ++l)
                for (int m = 0; m < q; ++m) {
                    int e = f.trace(f.mul(lp, m)) - f.trace(f.mul(l, mp));
                    e = ((e % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p);
                    L.at(static_cast<std::size_t>(lp) * q + mp,
                         static_cast<std::size_t>(l) * q + m) =
                        CycloNumber::root_of_unity(p, e) * inv_q;
                }
    return L;
}

CMatrix mac_dual_vars(int q) { return mac_dual_vars(*FieldSpec::make(q)); }

MultiPoly mac_D(const MultiPoly& f, const TransformContext& ctx) {
    require_vars(f, m_vars(ctx.spec->q()), "D");
    require_degree(f, ctx.n, "D");
    CMatrix L = mac_dual_vars(*ctx.spec);
    return f.substitute_linear(L) * (Rational(1) / ctx.K);
}

namespace {

CycloNumber map_get(const std::map<IndexMatrix, CycloNumber>& m, const IndexMatrix& k,
                    unsigned prime) {
    auto it = m.find(k);
    return it == m.end() ? CycloNumber::from_rational(Rational(0), prime) : it->second;
}

} // namespace

bool check_formally_self_dual(const EnumeratorSet& es) {
    const unsigned p = static_cast<unsigned>(es.spec->p());
    std::set<IndexMatrix> keys;
    for (const auto& [k, v] : es.D) { (void)v; keys.insert(k); }
    for (const auto& [k, v] : es.Dperp) { (void)v; keys.insert(k); }
    for (const auto& k : keys)
        if (map_get(es.D, k, p) != map_get(es.Dperp, k, p) / es.K) return false;

    // D = (1/K) Dperp forces the coarser identities; anything else is a bug.
    for (std::size_t i = 0; i < es.B.size(); ++i)
        if (es.B[i] != es.Bperp[i] / es.K)
            throw error("complete distributions are self-dual but the weight distribution is not");
    for (std::size_t i = 0; i < es.C.size(); ++i)
        if (es.C[i] != es.Cperp[i] / es.K)
            throw error("complete distributions are self-dual but the double distribution is not");
    return true;
}

bool check_formally_self_dual(const StabilizerCode& code) {
    return check_formally_self_dual(distributions_symplectic(code));
}

} // namespace qenum
