#include "qenum/stabilizer.hpp"

#include "qenum/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace qenum {

int symplectic_form(const ErrorLabel& u, const ErrorLabel& v) {
    const FieldSpec& f = *u.spec;
    if (!(f == *v.spec) || u.n() != v.n())
        throw error("symplectic form needs labels of one field and length");
    int acc = 0;
    for (int i = 0; i < u.n(); ++i) {
        acc += f.trace(f.mul(u.a[i], v.b[i]));
        acc += f.p() - f.trace(f.mul(u.b[i], v.a[i]));
    }
    return acc % f.p();
}

namespace {

struct TokLine {
    std::size_t num;
    std::vector<std::pair<std::string, std::size_t>> toks; // token, 1-based column
};

std::vector<TokLine> token_lines(const std::string& text) {
    std::vector<TokLine> out;
    std::size_t lineno = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        ++lineno;
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        TokLine tl{lineno, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            tl.toks.emplace_back(line.substr(start, i - start), start + 1);
        }
        if (!tl.toks.empty())
            out.push_back(std::move(tl));
        if (nl == std::string::npos)
            break;
        pos = nl + 1;
    }
    return out;
}

int int_tok(const TokLine& tl, std::size_t idx, const std::string& what) {
    if (idx >= tl.toks.size())
        throw parse_error("missing " + what, tl.num,
                          tl.toks.empty() ? 1 : tl.toks.back().second + tl.toks.back().first.size());
    const auto& [s, col] = tl.toks[idx];
    if (s.empty() || s.size() > 7 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw parse_error("expected a nonnegative integer for " + what + ", got '" + s + "'",
                          tl.num, col);
    return std::stoi(s);
}

} // namespace

StabilizerCode StabilizerCode::parse(const std::string& text) {
    auto lines = token_lines(text);
    if (lines.empty())
        throw parse_error("empty code file", 1, 1);

    StabilizerCode code;
    std::size_t li = 0;

    {
        const TokLine& tl = lines[li];
        if (tl.toks[0].first != "q")
            throw parse_error("expected 'q <order>' first, got '" + tl.toks[0].first + "'",
                              tl.num, tl.toks[0].second);
        int q = int_tok(tl, 1, "field order");
        if (tl.toks.size() > 2)
            throw parse_error("trailing tokens after field order", tl.num, tl.toks[2].second);
        ++li;
        std::vector<int> modulus;
        bool has_modulus = false;
        if (li < lines.size() && lines[li].toks[0].first == "modulus") {
            const TokLine& ml = lines[li];
            for (std::size_t i = 1; i < ml.toks.size(); ++i)
                modulus.push_back(int_tok(ml, i, "modulus coefficient"));
            has_modulus = true;
            ++li;
        }
        try {
            code.spec_ = has_modulus ? FieldSpec::make(q, modulus) : FieldSpec::make(q);
        } catch (const error& e) {
            const TokLine& at = has_modulus ? lines[li - 1] : tl;
            throw parse_error(e.what(), at.num, at.toks[0].second);
        }
    }

    if (li >= lines.size() || lines[li].toks[0].first != "n") {
        std::size_t num = li < lines.size() ? lines[li].num : lines.back().num + 1;
        throw parse_error("expected 'n <length>'", num, 1);
    }
    code.n_ = int_tok(lines[li], 1, "length");
    if (code.n_ < 1)
        throw parse_error("length must be positive", lines[li].num, lines[li].toks[1].second);
    if (lines[li].toks.size() > 2)
        throw parse_error("trailing tokens after length", lines[li].num, lines[li].toks[2].second);
    ++li;

    const int q = code.spec_->q();
    const int n = code.n_;
    std::vector<std::size_t> gen_lines;
    for (; li < lines.size(); ++li) {
        const TokLine& tl = lines[li];
        if (tl.toks[0].first != "gen")
            throw parse_error("unknown directive '" + tl.toks[0].first + "'", tl.num,
                              tl.toks[0].second);
        if (tl.toks.size() != static_cast<std::size_t>(2 * n) + 2)
            throw parse_error("generator needs " + std::to_string(n) + " + '|' + " +
                              std::to_string(n) + " entries", tl.num, tl.toks[0].second);
        ErrorLabel g{code.spec_, std::vector<int>(n), std::vector<int>(n)};
        for (int i = 0; i < n; ++i) {
            g.a[i] = int_tok(tl, 1 + i, "X entry");
            if (g.a[i] >= q)
                throw parse_error("entry " + std::to_string(g.a[i]) + " not below q = " +
                                  std::to_string(q), tl.num, tl.toks[1 + i].second);
        }
        if (tl.toks[1 + n].first != "|")
            throw parse_error("expected '|' between X and Z parts", tl.num,
                              tl.toks[1 + n].second);
        for (int i = 0; i < n; ++i) {
            g.b[i] = int_tok(tl, 2 + n + i, "Z entry");
            if (g.b[i] >= q)
                throw parse_error("entry " + std::to_string(g.b[i]) + " not below q = " +
                                  std::to_string(q), tl.num, tl.toks[2 + n + i].second);
        }
        code.gens_.push_back(std::move(g));
        gen_lines.push_back(tl.num);
    }

    for (std::size_t i = 0; i < code.gens_.size(); ++i)
        for (std::size_t j = i + 1; j < code.gens_.size(); ++j) {
            int form = symplectic_form(code.gens_[i], code.gens_[j]);
            if (form != 0)
                throw parse_error("generators " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " do not commute (symplectic form = " +
                                  std::to_string(form) + ")", gen_lines[j], 1);
        }

    // Closure over phased labels; key = a|b concatenated, value = phase
    // exponent.  Any label reached twice with different phases means the
    // group contains a nontrivial multiple of the identity.
    const FieldSpec& f = *code.spec_;
    const int p = f.p();
    std::map<std::vector<int>, int> phase_of;
    std::vector<int> id(2 * n, 0);
    phase_of[id] = 0;
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& cur : frontier) {
            const int kc = phase_of[cur];
            for (const auto& g : code.gens_) {
                int k = kc;
                std::vector<int> prod(2 * n);
                for (int i = 0; i < n; ++i) {
                    k = (k + f.trace(f.mul(cur[n + i], g.a[i]))) % p;
                    prod[i] = f.add(cur[i], g.a[i]);
                    prod[n + i] = f.add(cur[n + i], g.b[i]);
                }
                auto it = phase_of.find(prod);
                if (it == phase_of.end()) {
                    phase_of.emplace(prod, k);
                    next.push_back(std::move(prod));
                } else if (it->second != k) {
                    throw input_error(
                        "stabilizer closure contains c*I with c != 1 (inconsistent phases)");
                }
            }
        }
        frontier = std::move(next);
    }

    for (const auto& [ab, k] : phase_of)
        code.group_.push_back(PhasedLabel{k, std::vector<int>(ab.begin(), ab.begin() + n),
                                          std::vector<int>(ab.begin() + n, ab.end())});

    long qn = 1;
    for (int i = 0; i < n; ++i)
        qn *= q;
    if (qn % static_cast<long>(code.group_.size()) != 0)
        throw error("group order does not divide the space dimension");
    code.K_ = qn / static_cast<long>(code.group_.size());
    return code;
}

const CMatrix& StabilizerCode::projector(long budget) const {
    if (projector_.rows() != 0)
        return projector_;
    const unsigned p = static_cast<unsigned>(spec_->p());
    long dim = 1;
    for (int i = 0; i < n_; ++i)
        dim *= spec_->q();
    CMatrix sum(dim, dim, p);
    for (const auto& s : group_) {
        ErrorLabel e{spec_, s.a, s.b};
        sum = sum + operator_matrix(e, budget) * CycloNumber::root_of_unity(p, s.k);
    }
    projector_ = sum * Rational(1, static_cast<long>(group_.size()));
    return projector_;
}

bool EnumeratorSet::operator==(const EnumeratorSet& o) const {
    return *spec == *o.spec && n == o.n && K == o.K && B == o.B && Bperp == o.Bperp &&
           C == o.C && Cperp == o.Cperp && D == o.D && Dperp == o.Dperp;
}

bool EnumeratorSet::all_rational_nonneg() const {
    auto ok = [](const CycloNumber& v) { return v.is_rational() && v.rational_value() >= 0; };
    for (const auto& v : B)
        if (!ok(v)) return false;
    for (const auto& v : Bperp)
        if (!ok(v)) return false;
    for (const auto& v : C)
        if (!ok(v)) return false;
    for (const auto& v : Cperp)
        if (!ok(v)) return false;
    for (const auto& [j, v] : D)
        if (!ok(v)) return false;
    for (const auto& [j, v] : Dperp)
        if (!ok(v)) return false;
    return true;
}

namespace {

void prune_zeros(std::map<IndexMatrix, CycloNumber>& m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

EnumeratorSet empty_set(const StabilizerCode& code) {
    const unsigned p = static_cast<unsigned>(code.spec()->p());
    EnumeratorSet es;
    es.spec = code.spec();
    es.n = code.n();
    es.K = Rational(code.K());
    es.B.assign(es.n + 1, CycloNumber(p));
    es.Bperp.assign(es.n + 1, CycloNumber(p));
    es.C.assign((es.n + 1) * (es.n + 1), CycloNumber(p));
    es.Cperp.assign((es.n + 1) * (es.n + 1), CycloNumber(p));
    return es;
}

} // namespace

EnumeratorSet distributions_oracle(const StabilizerCode& code, long budget) {
    const FieldSpec& f = *code.spec();
    const int q = f.q(), n = code.n();
    const unsigned p = static_cast<unsigned>(f.p());
    const CMatrix& proj = code.projector(budget);
    const long dim = static_cast<long>(proj.rows());

    std::vector<long> qpow(n);
    qpow[n - 1] = 1;
    for (int i = n - 2; i >= 0; --i)
        qpow[i] = qpow[i + 1] * q;

    std::vector<CycloNumber> roots;
    for (unsigned k = 0; k < p; ++k)
        roots.push_back(CycloNumber::root_of_unity(p, k));

    EnumeratorSet es = empty_set(code);

    std::vector<long> perm(dim);
    std::vector<int> ph(dim);
    std::vector<CycloNumber> bucket(p);

    auto bucket_sum = [&](const std::vector<CycloNumber>& b) {
        CycloNumber acc(p);
        for (unsigned k = 0; k < p; ++k)
            acc = acc + b[k] * roots[k];
        return acc;
    };

    for (const auto& e : enumerate_errors(code.spec(), n, budget)) {
        // Column x of X_a Z_b holds zeta^ph(x) in row perm(x) = x + a.
        for (long x = 0; x < dim; ++x) {
            long y = 0;
            int phase = 0;
            for (int i = 0; i < n; ++i) {
                int d = static_cast<int>((x / qpow[i]) % q);
                y = y * q + f.add(d, e.a[i]);
                phase = (phase + f.trace(f.mul(e.b[i], d))) % static_cast<int>(p);
            }
            perm[x] = y;
            ph[x] = phase;
        }

        // Tr(eP) = sum_x zeta^ph(x) P[x][perm(x)]
        std::fill(bucket.begin(), bucket.end(), CycloNumber(p));
        for (long x = 0; x < dim; ++x)
            bucket[ph[x]] = bucket[ph[x]] + proj.at(x, perm[x]);
        CycloNumber tr_ep = bucket_sum(bucket);

        // Tr(e^dag P) = sum_x zeta^-ph(x) P[perm(x)][x]
        std::fill(bucket.begin(), bucket.end(), CycloNumber(p));
        for (long x = 0; x < dim; ++x)
            bucket[(p - ph[x]) % p] = bucket[(p - ph[x]) % p] + proj.at(perm[x], x);
        CycloNumber tr_edp = bucket_sum(bucket);

        // Tr(e^dag P e P) = sum_{x,u} zeta^(ph(u)-ph(x)) P[perm(x)][perm(u)] P[u][x]
        std::fill(bucket.begin(), bucket.end(), CycloNumber(p));
        for (long x = 0; x < dim; ++x)
            for (long u = 0; u < dim; ++u) {
                int k = ((ph[u] - ph[x]) % static_cast<int>(p) + p) % p;
                bucket[k] = bucket[k] + proj.at(perm[x], perm[u]) * proj.at(u, x);
            }
        CycloNumber tr_pair = bucket_sum(bucket);

        CycloNumber weight_term = tr_edp * tr_ep;
        WeightTriple w = weights(e);
        IndexMatrix j = index_matrix(e);
        es.B[w.swt] = es.B[w.swt] + weight_term;
        es.Bperp[w.swt] = es.Bperp[w.swt] + tr_pair;
        es.C[w.wx * (n + 1) + w.wz] = es.C[w.wx * (n + 1) + w.wz] + weight_term;
        es.Cperp[w.wx * (n + 1) + w.wz] = es.Cperp[w.wx * (n + 1) + w.wz] + tr_pair;
        auto [itD, insD] = es.D.try_emplace(j, CycloNumber(p));
        itD->second = itD->second + weight_term;
        auto [itDp, insDp] = es.Dperp.try_emplace(j, CycloNumber(p));
        itDp->second = itDp->second + tr_pair;
    }

    const long k_dim = code.K();
    const Rational unprimed_scale = Rational(1, static_cast<long>(p) * k_dim * k_dim);
    const Rational primed_scale = Rational(1, static_cast<long>(p) * k_dim);
    for (auto& v : es.B)
        v = v * unprimed_scale;
    for (auto& v : es.Bperp)
        v = v * primed_scale;
    for (auto& v : es.C)
        v = v * unprimed_scale;
    for (auto& v : es.Cperp)
        v = v * primed_scale;
    for (auto& [j, v] : es.D)
        v = v * unprimed_scale;
    for (auto& [j, v] : es.Dperp)
        v = v * primed_scale;
    prune_zeros(es.D);
    prune_zeros(es.Dperp);
    return es;
}

namespace {

// Row-reduces an F_p coefficient matrix in place; returns the rank.
int rref_mod_p(std::vector<std::vector<int>>& rows, int p) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        int inv = 1;
        for (int x = 1; x < p; ++x)
            if (rows[r][c] * x % p == 1) inv = x;
        for (auto& v : rows[r])
            v = v * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            int factor = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k)
                rows[i][k] = ((rows[i][k] - factor * rows[r][k]) % p + p) % p;
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<int>> nullspace_mod_p(std::vector<std::vector<int>> rows,
                                              std::size_t cols, int p) {
    int rank = rref_mod_p(rows, p);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < rank; ++i) {
        std::size_t c = 0;
        while (rows[i][c] == 0)
            ++c;
        pivot_col.push_back(static_cast<int>(c));
        is_pivot[c] = true;
    }
    std::vector<std::vector<int>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<int> v(cols, 0);
        v[free] = 1;
        for (int i = 0; i < rank; ++i)
            v[pivot_col[i]] = (p - rows[i][free] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// All F_p combinations of the basis vectors.
std::vector<std::vector<int>> span_mod_p(const std::vector<std::vector<int>>& basis,
                                         std::size_t cols, int p) {
    std::vector<std::vector<int>> out{std::vector<int>(cols, 0)};
    for (const auto& b : basis) {
        std::vector<std::vector<int>> next;
        next.reserve(out.size() * p);
        for (const auto& v : out)
            for (int c = 0; c < p; ++c) {
                std::vector<int> w(cols);
                for (std::size_t k = 0; k < cols; ++k)
                    w[k] = (v[k] + c * b[k]) % p;
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

EnumeratorSet distributions_symplectic(const StabilizerCode& code) {
    const FieldSpec& f = *code.spec();
    const int p = f.p(), s = f.s(), n = code.n();
    const std::size_t cols = static_cast<std::size_t>(2 * n * s);

    auto to_vec = [&](const ErrorLabel& e) {
        std::vector<int> v(cols);
        for (int i = 0; i < n; ++i) {
            auto ca = f.coeffs(e.a[i]);
            auto cb = f.coeffs(e.b[i]);
            for (int k = 0; k < s; ++k) {
                v[i * s + k] = ca[k];
                v[(n + i) * s + k] = cb[k];
            }
        }
        return v;
    };
    auto to_label = [&](const std::vector<int>& v) {
        ErrorLabel e{code.spec(), std::vector<int>(n), std::vector<int>(n)};
        for (int i = 0; i < n; ++i) {
            std::vector<int> ca(v.begin() + i * s, v.begin() + (i + 1) * s);
            std::vector<int> cb(v.begin() + (n + i) * s, v.begin() + (n + i + 1) * s);
            e.a[i] = f.index_of_coeffs(ca);
            e.b[i] = f.index_of_coeffs(cb);
        }
        return e;
    };

    std::vector<std::vector<int>> gen_rows;
    for (const auto& g : code.generators())
        gen_rows.push_back(to_vec(g));
    std::vector<std::vector<int>> span_basis = gen_rows;
    int rank = rref_mod_p(span_basis, p);
    span_basis.resize(rank);

    // The form is F_p-bilinear, so constraint row entries come from unit labels.
    std::vector<std::vector<int>> constraints;
    for (const auto& g : code.generators()) {
        std::vector<int> row(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<int> unit(cols, 0);
            unit[j] = 1;
            row[j] = symplectic_form(to_label(unit), g);
        }
        constraints.push_back(std::move(row));
    }
    auto dual_basis = nullspace_mod_p(constraints, cols, p);

    EnumeratorSet es = empty_set(code);
    const unsigned up = static_cast<unsigned>(p);
    auto tally = [&](const std::vector<std::vector<int>>& members, bool primed) {
        const Rational unit(1, p);
        for (const auto& v : members) {
            ErrorLabel e = to_label(v);
            WeightTriple w = weights(e);
            IndexMatrix j = index_matrix(e);
            auto add = [&](CycloNumber& slot) {
                slot = slot + CycloNumber::from_rational(unit, up);
            };
            if (primed) {
                add(es.Bperp[w.swt]);
                add(es.Cperp[w.wx * (n + 1) + w.wz]);
                add(es.Dperp.try_emplace(j, CycloNumber(up)).first->second);
            } else {
                add(es.B[w.swt]);
                add(es.C[w.wx * (n + 1) + w.wz]);
                add(es.D.try_emplace(j, CycloNumber(up)).first->second);
            }
        }
    };
    tally(span_mod_p(span_basis, cols, p), false);
    tally(span_mod_p(dual_basis, cols, p), true);
    return es;
}

std::vector<std::string> m_vars(int q) {
    std::vector<std::string> vars;
    vars.reserve(q * q);
    for (int l = 0; l < q; ++l)
        for (int m = 0; m < q; ++m)
            vars.push_back("M_" + std::to_string(l) + "_" + std::to_string(m));
    return vars;
}

MultiPoly enumerator_poly(const EnumeratorSet& es, Kind kind) {
    const int n = es.n, q = es.spec->q();
    switch (kind) {
        case Kind::B:
        case Kind::Bperp: {
            MultiPoly out({"x", "y"});
            const auto& src = kind == Kind::B ? es.B : es.Bperp;
            for (int i = 0; i <= n; ++i)
                out.add_term({static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(i)},
                             src[i]);
            return out;
        }
        case Kind::C:
        case Kind::Cperp: {
            MultiPoly out({"x", "y", "z", "w"});
            const auto& src = kind == Kind::C ? es.C : es.Cperp;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                    out.add_term({static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(i),
                                  static_cast<std::uint32_t>(n - j), static_cast<std::uint32_t>(j)},
                                 src[i * (n + 1) + j]);
            return out;
        }
        case Kind::D:
        case Kind::Dperp: {
            MultiPoly out(m_vars(q));
            const auto& src = kind == Kind::D ? es.D : es.Dperp;
            for (const auto& [j, v] : src) {
                Mono m(q * q, 0);
                for (int l = 0; l < q; ++l)
                    for (int mu = 0; mu < q; ++mu)
                        m[l * q + mu] = static_cast<std::uint32_t>(j.at(l, mu));
                out.add_term(m, v);
            }
            return out;
        }
    }
    throw error("unknown enumerator kind");
}

MultiPoly specialize_D_to_B(const MultiPoly& d, int q) {
    const std::vector<std::string> xy{"x", "y"};
    std::vector<MultiPoly> images;
    for (int l = 0; l < q; ++l)
        for (int m = 0; m < q; ++m)
            images.push_back(MultiPoly::variable(xy, l == 0 && m == 0 ? 0 : 1));
    return d.substitute(images);
}

MultiPoly specialize_D_to_C(const MultiPoly& d, int q) {
    const std::vector<std::string> xyzw{"x", "y", "z", "w"};
    std::vector<MultiPoly> images;
    for (int l = 0; l < q; ++l)
        for (int m = 0; m < q; ++m)
            images.push_back(MultiPoly::variable(xyzw, l == 0 ? 0 : 1) *
                             MultiPoly::variable(xyzw, m == 0 ? 2 : 3));
    return d.substitute(images);
}

} // namespace qenum
