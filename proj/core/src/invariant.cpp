#include "qenum/invariant.hpp"

#include "qenum/errors.hpp"
#include "qenum/macwilliams.hpp"

#include <map>

namespace qenum {

namespace {

CMatrix rational_diag(const std::vector<long>& d, unsigned prime) {
    std::vector<CycloNumber> e;
    e.reserve(d.size());
    for (long v : d) e.push_back(CycloNumber::from_rational(Rational(v), prime));
    return CMatrix::diagonal(e);
}

// Linear form row . vars from one matrix row.
MultiPoly row_form(const std::vector<std::string>& vars, const CMatrix& m, std::size_t row) {
    MultiPoly f(vars);
    for (std::size_t j = 0; j < vars.size(); ++j)
        f += MultiPoly::variable(vars, j) * m.at(row, j);
    return f;
}

MultiPoly var_product(const std::vector<std::string>& vars, std::size_t a, std::size_t b) {
    return MultiPoly::variable(vars, a) * MultiPoly::variable(vars, b);
}

InvariantCase weight_case(int q) {
    InvariantCase c;
    c.id = CaseId::Weight;
    c.q = q;
    c.vars = {"x", "y"};
    const long Q = q;
    c.sigma = CMatrix::from_rational_rows({
        {rational(1, Q), rational(Q * Q - 1, Q)},
        {rational(1, Q), rational(-1, Q)},
    });
    c.action = c.sigma;
    c.tau = rational_diag({1, -1}, 2);
    c.T = CMatrix::from_rational_rows({
        {rational(Q + 1, Q), rational(Q * Q - 1, Q)},
        {rational(1 - Q, Q), rational(Q * Q - 1, Q)},
    });
    c.gen_names = {"f1", "f2"};
    c.gen_degrees = {1, 2};
    c.generators = transfer_generators(c);
    return c;
}

InvariantCase double_case(int q) {
    InvariantCase c;
    c.id = CaseId::Double;
    c.q = q;
    c.vars = {"x", "y", "z", "w"};
    c.u_vars = {"u1", "u2", "v1", "v2"};
    const long Q = q;
    const Rational z(0);
    c.sigma = CMatrix::from_rational_rows({
        {rational(1, Q), rational(Q - 1, Q), z, z},
        {rational(1, Q), rational(-1, Q), z, z},
        {z, z, rational(1), rational(Q - 1)},
        {z, z, rational(1), rational(-1)},
    });
    c.action = CMatrix::from_rational_rows({
        {rational(1), rational(Q - 1), z, z},
        {rational(1), rational(-1), z, z},
        {z, z, rational(1, Q), rational(Q - 1, Q)},
        {z, z, rational(1, Q), rational(-1, Q)},
    });
    c.tau = rational_diag({1, 1, -1, -1}, 2);
    const Rational qm1sq = rational((Q - 1) * (Q - 1), Q);
    c.T = CMatrix::from_rational_rows({
        {rational(Q + 1, Q), qm1sq, rational(Q - 1, Q), rational(Q - 1, Q)},
        {rational(1), rational(1 - Q), rational(Q - 1), rational(Q - 1)},
        {rational(1 - Q, Q), qm1sq, rational(Q - 1, Q), rational(Q - 1, Q)},
        {rational(1), rational(1 - Q), rational(-Q - 1), rational(Q - 1)},
    });
    c.induced = CMatrix::from_rational_rows({
        {rational(1, Q), rational(1, Q), rational(1, Q), rational(1, Q)},
        {qm1sq, rational(1, Q), rational(1 - Q, Q), rational(1 - Q, Q)},
        {rational(Q - 1, Q), rational(-1, Q), rational(-1, Q), rational(Q - 1, Q)},
        {rational(Q - 1, Q), rational(-1, Q), rational(Q - 1, Q), rational(-1, Q)},
    });
    c.gen_names = {"g1", "g2", "g3", "g4", "g5"};
    c.gen_degrees = {2, 2, 4, 4, 4};
    c.generators = transfer_generators(c);
    c.relations.push_back(
        {"g5^2 - g3*g4", c.generators[4].pow(2) - c.generators[2] * c.generators[3]});
    return c;
}

InvariantCase complete_q2_case() {
    InvariantCase c;
    c.id = CaseId::CompleteQ2;
    c.q = 2;
    c.vars = m_vars(2);
    const Rational h(1, 2);
    c.sigma = CMatrix::from_rational_rows({
        {h, h, h, h},
        {h, h, -h, -h},
        {h, -h, h, -h},
        {h, -h, -h, h},
    });
    c.action = c.sigma;
    c.tau = rational_diag({1, 1, 1, -1}, 2);
    c.T = CMatrix::from_rational_rows({
        {rational(3, 2), rational(1, 2), rational(1, 2), rational(1, 2)},
        {rational(1), rational(-1), rational(3), rational(-1)},
        {rational(1), rational(-1), rational(-1), rational(3)},
        {rational(1), rational(-1), rational(-1), rational(-1)},
    });
    c.gen_names = {"f1", "f2", "f3", "f4"};
    c.gen_degrees = {1, 1, 1, 2};
    c.generators = transfer_generators(c);
    return c;
}

InvariantCase complete_q3_case() {
    InvariantCase c;
    c.id = CaseId::CompleteQ3;
    c.q = 3;
    c.vars = m_vars(3);

    // zeta_3 exponent of each sigma entry, scaled by 1/3.
    static const int E[9][9] = {
        {0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 1, 2, 2, 2},
        {0, 0, 0, 2, 2, 2, 1, 1, 1},
        {0, 2, 1, 0, 2, 1, 0, 2, 1},
        {0, 2, 1, 1, 0, 2, 2, 1, 0},
        {0, 2, 1, 2, 1, 0, 1, 0, 2},
        {0, 1, 2, 0, 1, 2, 0, 1, 2},
        {0, 1, 2, 1, 2, 0, 2, 0, 1},
        {0, 1, 2, 2, 0, 1, 1, 2, 0},
    };
    c.sigma = CMatrix(9, 9, 3);
    const Rational third(1, 3);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t col = 0; col < 9; ++col)
            c.sigma.at(r, col) = CycloNumber::root_of_unity(3, E[r][col]) * third;
    c.action = c.sigma.inverse().transpose();
    c.tau = rational_diag({1, 1, 1, 1, 1, 1, -1, -1, -1}, 3);

    const CycloNumber w = CycloNumber::zeta(3);
    const CycloNumber wb = -w - CycloNumber::from_rational(Rational(1), 3);
    auto r3 = [](long n, long d = 1) { return CycloNumber::from_rational(rational(n, d), 3); };
    const CycloNumber one = r3(1), four = r3(4), mtwo = r3(-2), t13 = r3(1, 3);
    const std::vector<std::vector<CycloNumber>> trows = {
        {one, wb, w, one, wb, w, four, wb, w},
        {one, w, wb, wb, four, w, w, wb, one},
        {one, one, four, w, w, w, wb, wb, wb},
        {r3(4, 3), t13, t13, t13, t13, t13, t13, t13, t13},
        {one, wb, w, wb, w, one, w, four, wb},
        {one, wb, w, w, one, wb, wb, w, four},
        {one, one, mtwo, w, w, w, wb, wb, wb},
        {r3(-2, 3), t13, t13, t13, t13, t13, t13, t13, t13},
        {one, w, wb, wb, mtwo, w, w, wb, one},
    };
    c.T = CMatrix(9, 9, 3);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t col = 0; col < 9; ++col) c.T.at(r, col) = trows[r][col];

    c.gen_names = {"f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10", "f11", "f12"};
    c.gen_degrees = {1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
    c.generators = transfer_generators(c);
    const auto& g = c.generators;
    c.relations = {
        {"f10^2 - f7*f8", g[9].pow(2) - g[6] * g[7]},
        {"f11^2 - f7*f9", g[10].pow(2) - g[6] * g[8]},
        {"f12^2 - f8*f9", g[11].pow(2) - g[7] * g[8]},
        {"f10*f11 - f7*f12", g[9] * g[10] - g[6] * g[11]},
        {"f10*f12 - f8*f11", g[9] * g[11] - g[7] * g[10]},
        {"f11*f12 - f9*f10", g[10] * g[11] - g[8] * g[9]},
    };
    return c;
}

// Expanded generator forms entered coefficient by coefficient, used to
// cross-check the transfer construction.
std::vector<MultiPoly> weight_closed(const InvariantCase& c) {
    const long Q = c.q;
    MultiPoly x = MultiPoly::variable(c.vars, 0), y = MultiPoly::variable(c.vars, 1);
    MultiPoly f1 = x + y * Rational(Q - 1);
    MultiPoly f2 = (x - y * Rational(Q + 1)).pow(2);
    return {f1, f2};
}

std::vector<MultiPoly> double_closed(const InvariantCase& c) {
    const long Q = c.q;
    MultiPoly xz = var_product(c.vars, 0, 2), yw = var_product(c.vars, 1, 3);
    MultiPoly xw = var_product(c.vars, 0, 3), yz = var_product(c.vars, 1, 2);
    const Rational qm1sq = rational((Q - 1) * (Q - 1), Q);
    MultiPoly g1 = xz * rational(Q + 1, Q) + yw * qm1sq + xw * rational(Q - 1, Q) +
                   yz * rational(Q - 1, Q);
    MultiPoly g2 = xz + yw * Rational(1 - Q) + xw * Rational(Q - 1) + yz * Rational(Q - 1);
    MultiPoly base3 = xz * rational(1 - Q, Q) + yw * qm1sq + xw * rational(Q - 1, Q) +
                      yz * rational(Q - 1, Q);
    MultiPoly base4 = xz + yw * Rational(1 - Q) - xw * Rational(Q + 1) + yz * Rational(Q - 1);
    return {g1, g2, base3.pow(2), base4.pow(2), base3 * base4};
}

std::vector<MultiPoly> q2_closed(const InvariantCase& c) {
    MultiPoly m00 = MultiPoly::variable(c.vars, 0), m01 = MultiPoly::variable(c.vars, 1);
    MultiPoly m10 = MultiPoly::variable(c.vars, 2), m11 = MultiPoly::variable(c.vars, 3);
    MultiPoly f1 = m00 * Rational(3) + m01 + m10 + m11;
    MultiPoly f2 = m00 - m01 + m10 * Rational(3) - m11;
    MultiPoly f3 = m00 - m01 - m10 + m11 * Rational(3);
    MultiPoly f4 = (m00 - m01 - m10 - m11).pow(2);
    return {f1, f2, f3, f4};
}

bool normal_form_ok(CaseId id, const std::vector<unsigned>& e) {
    switch (id) {
    case CaseId::Double: return e[4] <= 1;
    case CaseId::CompleteQ3: return e[9] + e[10] + e[11] <= 1;
    default: return true;
    }
}

} // namespace

InvariantCase build_case(CaseId id, int q) {
    switch (id) {
    case CaseId::Weight:
    case CaseId::Double:
        if (q < 2) throw input_error("this case needs an explicit q >= 2");
        return id == CaseId::Weight ? weight_case(q) : double_case(q);
    case CaseId::CompleteQ2:
        if (q != 0 && q != 2) throw input_error("the complete enumerator case is fixed at q = 2");
        return complete_q2_case();
    case CaseId::CompleteQ3:
        if (q != 0 && q != 3) throw input_error("the complete enumerator case is fixed at q = 3");
        return complete_q3_case();
    }
    throw input_error("unknown invariant case");
}

std::vector<MultiPoly> transfer_generators(const InvariantCase& c) {
    switch (c.id) {
    case CaseId::Weight: {
        const long Q = c.q;
        MultiPoly l1 = row_form(c.vars, c.T, 0);
        MultiPoly l2 = row_form(c.vars, c.T, 1);
        // Normalized by the leading scalars (q+1)/q and ((1-q)/q)^2.
        return {l1 * rational(Q, Q + 1), l2.pow(2) * rational_pow(rational(Q, Q - 1), 2)};
    }
    case CaseId::Double: {
        MultiPoly l1 = row_form(c.u_vars, c.T, 0);
        MultiPoly l2 = row_form(c.u_vars, c.T, 1);
        MultiPoly l3 = row_form(c.u_vars, c.T, 2);
        MultiPoly l4 = row_form(c.u_vars, c.T, 3);
        const std::vector<MultiPoly> products = {
            var_product(c.vars, 0, 2),  // u1 = xz
            var_product(c.vars, 1, 3),  // u2 = yw
            var_product(c.vars, 0, 3),  // v1 = xw
            var_product(c.vars, 1, 2),  // v2 = yz
        };
        std::vector<MultiPoly> out;
        for (const MultiPoly& f : {l1, l2, l3.pow(2), l4.pow(2), l3 * l4})
            out.push_back(f.substitute(products));
        return out;
    }
    case CaseId::CompleteQ2: {
        MultiPoly l1 = row_form(c.vars, c.T, 0);
        MultiPoly l2 = row_form(c.vars, c.T, 1);
        MultiPoly l3 = row_form(c.vars, c.T, 2);
        MultiPoly l4 = row_form(c.vars, c.T, 3);
        return {l1 * Rational(2), l2, l3, l4.pow(2)};
    }
    case CaseId::CompleteQ3: {
        std::vector<MultiPoly> l;
        for (std::size_t i = 0; i < 9; ++i) l.push_back(row_form(c.vars, c.T, i));
        return {l[0],          l[1],          l[2],        l[3],        l[4],        l[5],
                l[6].pow(2),   l[7].pow(2),   l[8].pow(2), l[6] * l[7], l[6] * l[8], l[7] * l[8]};
    }
    }
    throw input_error("unknown invariant case");
}

bool check_invariance(const MultiPoly& f, const InvariantCase& c) {
    if (f.vars() != c.vars)
        throw input_error("polynomial variables do not match the invariant case");
    return f.substitute_linear(c.action) == f;
}

std::vector<CheckResult> verify_case(const InvariantCase& c) {
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, bool ok) { out.push_back({name, ok}); };
    const unsigned prime = c.id == CaseId::CompleteQ3 ? 3 : 2;
    const std::size_t nv = c.vars.size();
    const CMatrix conj = c.T.inverse() * c.tau * c.T;

    auto add_invariance = [&] {
        for (std::size_t i = 0; i < c.generators.size(); ++i)
            add(c.gen_names[i] + " invariant", check_invariance(c.generators[i], c));
    };
    auto add_relations = [&] {
        for (const Relation& r : c.relations) add("relation " + r.name, r.witness.is_zero());
    };

    switch (c.id) {
    case CaseId::Weight: {
        add("sigma^2 = I", c.sigma * c.sigma == CMatrix::identity(nv, prime));
        add("sigma = T^-1 * tau * T", conj == c.sigma);
        add_invariance();
        add("f1, f2 match their closed forms", c.generators == weight_closed(c));
        MultiPoly jac = c.generators[0].derivative(0) * c.generators[1].derivative(1) -
                        c.generators[0].derivative(1) * c.generators[1].derivative(0);
        add("Jacobian of (f1, f2) is nonsingular", !jac.is_zero());
        break;
    }
    case CaseId::Double: {
        const long Q = c.q;
        CMatrix want = CMatrix::diagonal({
            CycloNumber::from_rational(rational(1, Q)), CycloNumber::from_rational(rational(1, Q)),
            CycloNumber::from_rational(rational(Q)), CycloNumber::from_rational(rational(Q))});
        add("sigma^2 = diag(1/q, 1/q, q, q)", c.sigma * c.sigma == want);
        add("action = sigma^-1", c.action == c.sigma.inverse());

        // Induced matrix on the invariant products of the squared action.
        const std::vector<MultiPoly> umono = {
            var_product(c.vars, 0, 2), var_product(c.vars, 1, 3),
            var_product(c.vars, 0, 3), var_product(c.vars, 1, 2)};
        const std::vector<Mono> ukeys = {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
        CMatrix m(4, 4, prime);
        bool closed = true;
        for (std::size_t j = 0; j < 4; ++j) {
            MultiPoly img = umono[j].substitute_linear(c.action);
            MultiPoly rebuilt(c.vars);
            for (std::size_t i = 0; i < 4; ++i) {
                m.at(j, i) = img.coeff(ukeys[i]);
                rebuilt += umono[i] * m.at(j, i);
            }
            closed = closed && rebuilt == img;
        }
        add("action maps {xz, yw, xw, yz} into their span", closed);
        // The stored induced matrix lists images column by column.
        add("induced matrix matches the action on products", m.transpose() == c.induced);
        add("induced action conjugates to tau via T", conj == m);
        if (c.q == 2) add("induced matrix is symmetric at q = 2", conj == c.induced);

        CMatrix a2 = c.action * c.action;
        bool fixed = true;
        for (const MultiPoly& u : umono) fixed = fixed && u.substitute_linear(a2) == u;
        add("sigma^2 fixes xz, xw, yz, yw", fixed);

        add_invariance();
        add_relations();
        add("g1..g5 match their closed forms", c.generators == double_closed(c));
        break;
    }
    case CaseId::CompleteQ2: {
        add("sigma^2 = I", c.sigma * c.sigma == CMatrix::identity(nv, prime));
        add("sigma is symmetric", c.sigma.transpose() == c.sigma);
        add("sigma = T^-1 * tau * T", conj == c.sigma);
        add("sigma equals the dual-variable matrix", c.sigma == mac_dual_vars(2));
        add_invariance();
        auto closed = q2_closed(c);
        add("f1, f2, f3 match their closed forms",
            c.generators[0] == closed[0] && c.generators[1] == closed[1] &&
                c.generators[2] == closed[2]);
        add("f4 = (M_0_0 - M_0_1 - M_1_0 - M_1_1)^2", c.generators[3] == closed[3]);
        break;
    }
    case CaseId::CompleteQ3: {
        add("sigma^2 = I", c.sigma * c.sigma == CMatrix::identity(nv, prime));
        add("delta^2 = I", c.action * c.action == CMatrix::identity(nv, prime));
        add("delta = transpose(sigma^-1)", c.action == c.sigma.inverse().transpose());
        add("delta = T^-1 * tau * T", conj == c.action);
        add("delta equals the dual-variable matrix", c.action == mac_dual_vars(3));
        add_invariance();
        add_relations();
        break;
    }
    }
    return out;
}

GeneratorExpression express_in_generators(const MultiPoly& f, const InvariantCase& c,
                                          unsigned max_degree) {
    if (f.vars() != c.vars)
        throw input_error("polynomial variables do not match the invariant case");
    if (!check_invariance(f, c))
        throw not_invariant_error("polynomial is not fixed by the group action");

    MultiPoly expr(c.gen_names);
    if (f.is_zero()) return {expr};
    if (!f.is_homogeneous())
        throw input_error("expression extraction needs a homogeneous polynomial");
    const unsigned d = static_cast<unsigned>(f.total_degree());
    if (d > max_degree)
        throw input_error("degree " + std::to_string(d) + " exceeds the search cap " +
                          std::to_string(max_degree));

    const std::size_t k = c.generators.size();

    // All generator exponent vectors of matching weighted degree, in normal
    // form.  Generator powers are cached up to the degree bound.
    std::vector<std::vector<MultiPoly>> pows(k);
    for (std::size_t i = 0; i < k; ++i) {
        pows[i].push_back(MultiPoly::constant(c.vars, Rational(1)));
        for (unsigned e = 1; e * c.gen_degrees[i] <= d; ++e)
            pows[i].push_back(pows[i].back() * c.generators[i]);
    }
    std::vector<std::vector<unsigned>> cands;
    std::vector<unsigned> cur(k, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned rem) {
        if (i == k) {
            if (rem == 0 && normal_form_ok(c.id, cur)) cands.push_back(cur);
            return;
        }
        for (unsigned e = 0; e * c.gen_degrees[i] <= rem; ++e) {
            cur[i] = e;
            rec(i + 1, rem - e * c.gen_degrees[i]);
        }
        cur[i] = 0;
    };
    rec(0, d);

    std::vector<MultiPoly> products;
    products.reserve(cands.size());
    std::map<Mono, std::size_t, GradedLexLess> rows;
    auto note = [&](const MultiPoly& p) {
        for (const auto& [mono, coeff] : p.terms()) {
            (void)coeff;
            rows.emplace(mono, rows.size());
        }
    };
    note(f);
    for (const auto& e : cands) {
        MultiPoly p = MultiPoly::constant(c.vars, Rational(1));
        for (std::size_t i = 0; i < k; ++i)
            if (e[i] > 0) p *= pows[i][e[i]];
        note(p);
        products.push_back(std::move(p));
    }

    const unsigned prime = c.id == CaseId::CompleteQ3 ? 3 : 2;
    CMatrix a(rows.size(), cands.size(), prime);
    std::vector<CycloNumber> b(rows.size(), CycloNumber::from_rational(Rational(0), prime));
    for (const auto& [mono, r] : rows) b[r] = f.coeff(mono);
    for (std::size_t j = 0; j < cands.size(); ++j)
        for (const auto& [mono, coeff] : products[j].terms()) a.at(rows.at(mono), j) = coeff;

    auto sol = solve_linear_exact(a, b);
    if (!sol)
        throw error("invariant polynomial lies outside the span of the generator products");
    for (std::size_t j = 0; j < cands.size(); ++j)
        if (!(*sol)[j].is_zero())
            expr.add_term(Mono(cands[j].begin(), cands[j].end()), (*sol)[j]);

    GeneratorExpression ge{expr};
    if (ge.evaluate(c) != f) throw error("generator expression failed re-expansion");
    return ge;
}

} // namespace qenum
