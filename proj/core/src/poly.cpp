#include "qenum/poly.hpp"

#include "qenum/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

namespace qenum {

bool GradedLexLess::operator()(const Mono& a, const Mono& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.empty())
        throw error("polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const CycloNumber& c) {
    MultiPoly p(vars);
    p.add_term(Mono(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const Rational& c) {
    return constant(vars, CycloNumber::from_rational(c));
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, std::size_t index) {
    MultiPoly p(vars);
    if (index >= vars.size())
        throw error("variable index out of range");
    Mono m(vars.size(), 0);
    m[index] = 1;
    p.add_term(m, CycloNumber::from_rational(Rational(1)));
    return p;
}

long MultiPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    // Terms are graded, so the last one carries the top degree.
    const Mono& m = terms_.rbegin()->first;
    return static_cast<long>(std::accumulate(m.begin(), m.end(), 0ul));
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    unsigned long d0 = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0ul);
    unsigned long d1 = std::accumulate(terms_.rbegin()->first.begin(), terms_.rbegin()->first.end(), 0ul);
    return d0 == d1;
}

CycloNumber MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycloNumber() : it->second;
}

void MultiPoly::add_term(const Mono& m, const CycloNumber& c) {
    if (m.size() != vars_.size())
        throw error("monomial arity mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(vars_);
    for (const auto& [m, c] : terms_)
        p.terms_.emplace(m, -c);
    return p;
}

namespace {

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars())
        throw error("polynomial variable lists differ");
}

} // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_vars(*this, o);
    MultiPoly p(*this);
    for (const auto& [m, c] : o.terms_)
        p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_same_vars(*this, o);
    MultiPoly p(*this);
    for (const auto& [m, c] : o.terms_)
        p.add_term(m, -c);
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_vars(*this, o);
    MultiPoly p(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            p.add_term(m, ca * cb);
        }
    return p;
}

MultiPoly MultiPoly::operator*(const CycloNumber& s) const {
    MultiPoly p(vars_);
    if (s.is_zero())
        return p;
    for (const auto& [m, c] : terms_)
        p.add_term(m, c * s);
    return p;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    return *this * CycloNumber::from_rational(s);
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars_ != o.vars_ || terms_.size() != o.terms_.size())
        return false;
    auto ia = terms_.begin();
    auto ib = o.terms_.begin();
    for (; ia != terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second)
            return false;
    return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(vars_, Rational(1));
    for (unsigned i = 0; i < e; ++i)
        acc *= *this;
    return acc;
}

MultiPoly MultiPoly::substitute_linear(const CMatrix& g) const {
    if (g.rows() != vars_.size() || g.cols() != vars_.size())
        throw error("substitution matrix shape mismatch");
    std::vector<MultiPoly> images;
    images.reserve(vars_.size());
    for (std::size_t j = 0; j < vars_.size(); ++j) {
        MultiPoly img(vars_);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            Mono m(vars_.size(), 0);
            m[i] = 1;
            img.add_term(m, g.at(j, i));
        }
        images.push_back(std::move(img));
    }
    return substitute(images);
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size())
        throw error("substitution image count mismatch");
    for (const auto& img : images)
        if (img.vars() != images[0].vars())
            throw error("substitution images use differing variable lists");
    const std::vector<std::string>& tvars = images[0].vars();
    // Power cache per variable, filled on demand.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(MultiPoly::constant(tvars, Rational(1)));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    MultiPoly out(tvars);
    for (const auto& [m, c] : terms_) {
        MultiPoly prod = MultiPoly::constant(tvars, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0)
                prod *= power(i, m[i]);
        out += prod;
    }
    return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= vars_.size())
        throw error("variable index out of range");
    MultiPoly p(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d(m);
        d[var] -= 1;
        p.add_term(d, c * Rational(static_cast<long>(m[var])));
    }
    return p;
}

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    // Highest graded-lex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        const CycloNumber& c = it->second;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        bool negative = false;
        std::string body;
        if (c.is_rational()) {
            Rational v = c.rational_value();
            negative = v < 0;
            Rational mag = negative ? Rational(-v) : v;
            if (mono.empty())
                body = rational_str(mag);
            else if (mag == 1)
                body = mono;
            else
                body = rational_str(mag) + "*" + mono;
        } else {
            body = c.str();
            if (!mono.empty())
                body += "*" + mono;
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += body;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.str();
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    explicit Cursor(const std::string& t) : text(t) {}

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void resume_from(const Cursor& o) {
        pos = o.pos;
        line = o.line;
        col = o.col;
    }

    char advance() {
        char ch = text[pos++];
        if (ch == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return ch;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line, col);
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

unsigned long parse_uint(Cursor& cur, const char* what) {
    cur.skip_ws();
    if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail(std::string("expected ") + what);
    unsigned long v = 0;
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        v = v * 10 + static_cast<unsigned long>(cur.advance() - '0');
        if (v > 1000000000ul)
            cur.fail("integer literal too large");
    }
    return v;
}

Rational parse_unsigned_rational(Cursor& cur) {
    unsigned long num = parse_uint(cur, "integer");
    if (!cur.eof() && cur.peek() == '/') {
        cur.advance();
        unsigned long den = parse_uint(cur, "denominator");
        if (den == 0)
            cur.fail("zero denominator");
        return rational(static_cast<long>(num), static_cast<long>(den));
    }
    return Rational(static_cast<long>(num));
}

std::string parse_ident(Cursor& cur) {
    std::string name;
    while (!cur.eof() && ident_char(cur.peek()))
        name += cur.advance();
    return name;
}

// Parenthesized cyclotomic coefficient: "(c0 + c1*w + c2*w^2 ...)".
CycloNumber parse_cyclo_group(Cursor& cur, unsigned prime) {
    CycloNumber value(prime);
    bool first = true;
    while (true) {
        cur.skip_ws();
        bool neg = false;
        if (!cur.eof() && (cur.peek() == '+' || cur.peek() == '-')) {
            neg = cur.peek() == '-';
            cur.advance();
            cur.skip_ws();
        } else if (!first) {
            break;
        }
        Rational mag(1);
        bool have_mag = false;
        if (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            mag = parse_unsigned_rational(cur);
            have_mag = true;
        }
        long zexp = 0;
        cur.skip_ws();
        bool have_w = false;
        if (!cur.eof() && (cur.peek() == '*' || ident_start(cur.peek()))) {
            std::size_t save = cur.pos;
            Cursor probe = cur;
            if (probe.peek() == '*') {
                probe.advance();
                probe.skip_ws();
            }
            if (!probe.eof() && ident_start(probe.peek())) {
                std::string name = parse_ident(probe);
                if (name == "w") {
                    have_w = true;
                    zexp = 1;
                    if (!probe.eof() && probe.peek() == '^') {
                        probe.advance();
                        zexp = static_cast<long>(parse_uint(probe, "exponent"));
                    }
                    cur.resume_from(probe);
                } else {
                    cur.fail("unexpected identifier '" + name + "' in coefficient");
                }
            }
            (void)save;
        }
        if (!have_mag && !have_w)
            cur.fail("expected coefficient term");
        CycloNumber term = have_w ? CycloNumber::root_of_unity(prime, zexp) * mag
                                  : CycloNumber::from_rational(mag, prime);
        value += neg ? -term : term;
        first = false;
        cur.skip_ws();
        if (cur.eof() || (cur.peek() != '+' && cur.peek() != '-'))
            break;
    }
    return value;
}

} // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     unsigned prime) {
    Cursor cur(text);
    MultiPoly poly(vars);
    auto var_index = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return vars.size();
    };

    cur.skip_ws();
    if (cur.eof())
        cur.fail("empty polynomial");

    bool first = true;
    while (true) {
        cur.skip_ws();
        if (cur.eof())
            break;
        bool neg = false;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (first && cur.peek() == '+')
                cur.fail("polynomial may not start with '+'");
            neg = cur.peek() == '-';
            cur.advance();
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        // One term: '*'-separated factors.
        CycloNumber coeff = CycloNumber::from_rational(Rational(1), prime);
        Mono mono(vars.size(), 0);
        bool want_factor = true;
        bool any_factor = false;
        while (want_factor) {
            cur.skip_ws();
            if (cur.eof())
                cur.fail("unexpected end of input in term");
            char ch = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                coeff *= CycloNumber::from_rational(parse_unsigned_rational(cur), prime);
            } else if (ch == '(') {
                cur.advance();
                coeff *= parse_cyclo_group(cur, prime);
                cur.skip_ws();
                if (cur.eof() || cur.peek() != ')')
                    cur.fail("expected ')'");
                cur.advance();
            } else if (ident_start(ch)) {
                std::size_t line = cur.line, col = cur.col;
                std::string name = parse_ident(cur);
                std::size_t idx = var_index(name);
                if (idx == vars.size())
                    throw parse_error("unknown variable '" + name + "'", line, col);
                unsigned long e = 1;
                cur.skip_ws();
                if (!cur.eof() && cur.peek() == '^') {
                    cur.advance();
                    e = parse_uint(cur, "exponent");
                }
                mono[idx] += static_cast<std::uint32_t>(e);
            } else {
                cur.fail(std::string("unexpected character '") + ch + "'");
            }
            any_factor = true;
            cur.skip_ws();
            if (!cur.eof() && cur.peek() == '*') {
                cur.advance();
                want_factor = true;
            } else {
                want_factor = false;
            }
        }
        if (!any_factor)
            cur.fail("empty term");
        poly.add_term(mono, neg ? -coeff : coeff);
        first = false;
        cur.skip_ws();
        if (cur.eof())
            break;
        if (cur.peek() != '+' && cur.peek() != '-')
            cur.fail("expected '+' or '-' between terms");
    }
    return poly;
}

} // namespace qenum
