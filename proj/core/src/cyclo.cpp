#include "qenum/cyclo.hpp"

#include "qenum/errors.hpp"

#include <ostream>

namespace qenum {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

CycloNumber::CycloNumber(unsigned prime) : prime_(prime) {
    if (!is_prime(prime))
        throw error("cyclotomic order must be prime, got " + std::to_string(prime));
    c_.assign(prime - 1, Rational(0));
}

CycloNumber CycloNumber::from_rational(const Rational& r, unsigned prime) {
    CycloNumber x(prime);
    x.c_[0] = r;
    return x;
}

CycloNumber CycloNumber::root_of_unity(unsigned prime, long exp) {
    CycloNumber x(prime);
    long p = static_cast<long>(prime);
    long e = ((exp % p) + p) % p;
    if (e < p - 1) {
        x.c_[static_cast<std::size_t>(e)] = 1;
    } else {
        // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        for (auto& ck : x.c_) ck = -1;
    }
    return x;
}

bool CycloNumber::is_zero() const {
    for (const auto& ck : c_)
        if (ck != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

Rational CycloNumber::rational_value() const {
    if (!is_rational())
        throw error("cyclotomic value " + str() + " is not rational");
    return c_[0];
}

CycloNumber CycloNumber::lift_to(unsigned prime) const {
    return from_rational(rational_value(), prime);
}

void CycloNumber::harmonize(CycloNumber& a, CycloNumber& b) {
    if (a.prime_ == b.prime_) return;
    if (a.is_rational())
        a = a.lift_to(b.prime_);
    else if (b.is_rational())
        b = b.lift_to(a.prime_);
    else
        throw error("mismatched cyclotomic primes " + std::to_string(a.prime_) +
                    " and " + std::to_string(b.prime_));
}

CycloNumber CycloNumber::reduce(unsigned prime, std::vector<Rational> raw) {
    // raw is indexed by zeta exponent, possibly up to 2p-4.
    std::size_t deg = prime - 1;
    for (std::size_t e = raw.size(); e-- > prime;)
        raw[e - prime] += raw[e]; // zeta^p = 1
    CycloNumber out(prime);
    for (std::size_t k = 0; k < deg; ++k)
        out.c_[k] = raw[k];
    if (raw.size() > deg && raw[deg] != 0) {
        for (std::size_t k = 0; k < deg; ++k)
            out.c_[k] -= raw[deg];
    }
    return out;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber out(*this);
    for (auto& ck : out.c_) ck = -ck;
    return out;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    if (prime_ != o.prime_) {
        CycloNumber a(*this), b(o);
        harmonize(a, b);
        return a + b;
    }
    CycloNumber out(*this);
    for (std::size_t k = 0; k < out.c_.size(); ++k)
        out.c_[k] += o.c_[k];
    return out;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
    if (prime_ != o.prime_) {
        CycloNumber a(*this), b(o);
        harmonize(a, b);
        return a - b;
    }
    CycloNumber out(*this);
    for (std::size_t k = 0; k < out.c_.size(); ++k)
        out.c_[k] -= o.c_[k];
    return out;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    if (prime_ != o.prime_) {
        CycloNumber a(*this), b(o);
        harmonize(a, b);
        return a * b;
    }
    if (is_zero() || o.is_zero())
        return CycloNumber(prime_);
    std::size_t deg = prime_ - 1;
    std::vector<Rational> raw(2 * deg - 1, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (o.c_[j] == 0) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    return reduce(prime_, std::move(raw));
}

CycloNumber CycloNumber::operator*(const Rational& r) const {
    CycloNumber out(*this);
    for (auto& ck : out.c_) ck *= r;
    return out;
}

void CycloNumber::submul(const CycloNumber& f, const CycloNumber& g) {
    if (prime_ != f.prime_ || f.prime_ != g.prime_) {
        *this -= f * g;
        return;
    }
    if (f.is_zero() || g.is_zero())
        return;
    const std::size_t deg = prime_ - 1;
    thread_local std::vector<Rational> raw;
    raw.assign(2 * deg - 1, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (f.c_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (g.c_[j] == 0) continue;
            raw[i + j] += f.c_[i] * g.c_[j];
        }
    }
    for (std::size_t e = raw.size(); e-- > prime_;)
        raw[e - prime_] += raw[e];
    for (std::size_t k = 0; k < deg; ++k)
        c_[k] -= raw[k];
    if (raw.size() > deg && raw[deg] != 0)
        for (std::size_t k = 0; k < deg; ++k)
            c_[k] += raw[deg];
}

CycloNumber CycloNumber::operator/(const Rational& r) const {
    if (r == 0)
        throw error("division by zero");
    CycloNumber out(*this);
    for (auto& ck : out.c_) ck /= r;
    return out;
}

CycloNumber CycloNumber::operator/(const CycloNumber& o) const {
    return *this * o.inverse();
}

bool CycloNumber::operator==(const CycloNumber& o) const {
    if (prime_ == o.prime_)
        return c_ == o.c_;
    CycloNumber a(*this), b(o);
    harmonize(a, b);
    return a.c_ == b.c_;
}

CycloNumber CycloNumber::galois(unsigned long t) const {
    if (t % prime_ == 0)
        throw error("galois exponent must be coprime to the prime");
    std::vector<Rational> raw(prime_, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        raw[(k * t) % prime_] += c_[k];
    }
    return reduce(prime_, std::move(raw));
}

CycloNumber CycloNumber::conjugate() const {
    if (prime_ == 2) return *this;
    return galois(prime_ - 1);
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero())
        throw error("division by zero");
    if (is_rational())
        return from_rational(Rational(1) / c_[0], prime_);
    // Norm trick: multiply all nontrivial Galois conjugates; the full
    // product with *this is the (rational) field norm.
    CycloNumber conj_prod = galois(2);
    for (unsigned long t = 3; t < prime_; ++t)
        conj_prod *= galois(t);
    CycloNumber norm = *this * conj_prod;
    return conj_prod / norm.rational_value();
}

CycloNumber CycloNumber::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    CycloNumber acc = from_rational(Rational(1), prime_);
    CycloNumber base(*this);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string CycloNumber::str() const {
    if (is_rational())
        return rational_str(c_[0]);
    std::string out = "(";
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        bool neg = c_[k] < 0;
        Rational mag = neg ? Rational(-c_[k]) : c_[k];
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string body;
        if (k == 0) {
            body = rational_str(mag);
        } else {
            if (mag != 1)
                body = rational_str(mag) + "*";
            body += "w";
            if (k >= 2)
                body += "^" + std::to_string(k);
        }
        out += body;
    }
    out += ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& c) {
    return os << c.str();
}

} // namespace qenum
