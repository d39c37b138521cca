#pragma once

#include "qenum/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qenum {

// Element of the cyclotomic field Q(zeta_p) for a prime p, stored on the
// power basis {1, zeta, ..., zeta^(p-2)} with zeta^(p-1) reduced via
// 1 + zeta + ... + zeta^(p-1) = 0.  For p = 2 this degenerates to a plain
// rational (zeta_2 = -1).
//
// Mixed-prime arithmetic is allowed only when one operand is rational
// (Q embeds in every Q(zeta_p)); anything else throws.
class CycloNumber {
public:
    CycloNumber() : prime_(2), c_(1, Rational(0)) {}
    explicit CycloNumber(unsigned prime);

    static CycloNumber from_rational(const Rational& r, unsigned prime = 2);
    // zeta_p^exp as a field element (exp taken mod p).
    static CycloNumber root_of_unity(unsigned prime, long exp);
    static CycloNumber zeta(unsigned prime) { return root_of_unity(prime, 1); }

    unsigned prime() const { return prime_; }
    const Rational& coeff(std::size_t k) const { return c_.at(k); }
    std::size_t basis_size() const { return c_.size(); }

    bool is_zero() const;
    bool is_rational() const;
    // Throws unless is_rational().
    Rational rational_value() const;

    CycloNumber operator-() const;
    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber operator/(const CycloNumber& o) const;
    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

    CycloNumber operator*(const Rational& r) const;
    CycloNumber operator/(const Rational& r) const;

    // *this -= f * g without temporaries; the workhorse of exact elimination.
    void submul(const CycloNumber& f, const CycloNumber& g);

    bool operator==(const CycloNumber& o) const;
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    // Field automorphism zeta -> zeta^t, gcd(t, p) = 1.
    CycloNumber galois(unsigned long t) const;
    // Complex conjugation, zeta -> zeta^(p-1).
    CycloNumber conjugate() const;
    CycloNumber inverse() const;
    CycloNumber pow(long e) const;

    // Rationals print as "a/b"; proper cyclotomic values print
    // parenthesized on the power basis, e.g. "(-1 - w)" with w = zeta_p.
    std::string str() const;

private:
    // Lifts a rational value into Q(zeta_p); requires is_rational().
    CycloNumber lift_to(unsigned prime) const;
    static void harmonize(CycloNumber& a, CycloNumber& b);
    static CycloNumber reduce(unsigned prime, std::vector<Rational> raw);

    unsigned prime_;
    std::vector<Rational> c_;
};

inline CycloNumber operator*(const Rational& r, const CycloNumber& c) { return c * r; }

std::ostream& operator<<(std::ostream& os, const CycloNumber& c);

} // namespace qenum
