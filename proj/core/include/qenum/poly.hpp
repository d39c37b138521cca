#pragma once

#include "qenum/cyclo.hpp"
#include "qenum/matrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qenum {

using Mono = std::vector<std::uint32_t>;

// Graded order: total degree first, ties broken lexicographically in the
// declared variable order.
struct GradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial over Q(zeta_p) coefficients with a fixed,
// ordered variable list.  Binary operations require identical variable
// lists.  Terms are kept in canonical graded-lex order and zero terms are
// never stored.
class MultiPoly {
public:
    using TermMap = std::map<Mono, CycloNumber, GradedLexLess>;

    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly zero(const std::vector<std::string>& vars) { return MultiPoly(vars); }
    static MultiPoly constant(const std::vector<std::string>& vars, const CycloNumber& c);
    static MultiPoly constant(const std::vector<std::string>& vars, const Rational& c);
    static MultiPoly variable(const std::vector<std::string>& vars, std::size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    long total_degree() const;
    bool is_homogeneous() const;
    CycloNumber coeff(const Mono& m) const;
    void add_term(const Mono& m, const CycloNumber& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const CycloNumber& s) const;
    MultiPoly operator*(const Rational& s) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const;

    // Substitutes variable j by the linear combination given by row j of g:
    // x_j -> sum_i g[j][i] * x_i.  g must be square of size vars().
    MultiPoly substitute_linear(const CMatrix& g) const;

    // General substitution: variable i is replaced by images[i].  All images
    // must share one variable list, which becomes the result's list.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    MultiPoly derivative(std::size_t var) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Parses the textual polynomial syntax, e.g. "1/2*x^2 + 3/2*y^2" or
// "(1 + 2*w)*M_0_0*M_1_1".  `prime` fixes the meaning of `w` = zeta_prime
// inside parenthesized coefficients.  Unknown variables are rejected.
// Throws parse_error with 1-based line/column positions.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     unsigned prime = 2);

} // namespace qenum
