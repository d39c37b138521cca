#include "qenum/fq.hpp"

#include "qenum/errors.hpp"

namespace qenum {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Precondition: q = p^s with p prime; returns (p, s) or throws.
std::pair<int, int> factor_prime_power(int q) {
    if (q < 2)
        throw input_error("field order must be at least 2");
    int p = 2;
    while (p <= q && q % p != 0) ++p;
    int s = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (rest != 1 || !is_prime(p))
        throw input_error("field order " + std::to_string(q) + " is not a prime power");
    return {p, s};
}

std::vector<int> default_modulus(int q) {
    switch (q) {
        case 4: return {1, 1, 1};    // t^2 + t + 1
        case 8: return {1, 1, 0, 1}; // t^3 + t + 1
        case 9: return {1, 0, 1};    // t^2 + 1
        default:
            throw input_error("no built-in modulus for field order " + std::to_string(q) +
                        " (supported extensions: 4, 8, 9)");
    }
}

// Multiplies two coefficient vectors mod (modulus, p).  Degrees stay
// below s, so schoolbook multiplication plus long division is plenty.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& modulus, int p, int s) {
    std::vector<int> prod(2 * s - 1, 0);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // modulus is monic of degree s.
    for (int d = 2 * s - 2; d >= s; --d) {
        int f = prod[d];
        if (f == 0) continue;
        for (int k = 0; k <= s; ++k) {
            int idx = d - s + k;
            prod[idx] = ((prod[idx] - f * modulus[k]) % p + p) % p;
        }
    }
    prod.resize(s);
    return prod;
}

} // namespace

FieldSpec::FieldSpec(int p, int s, std::vector<int> modulus)
    : p_(p), s_(s), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < s_; ++i) q_ *= p_;

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    trace_.assign(q_, 0);

    std::vector<std::vector<int>> elems(q_);
    for (int k = 0; k < q_; ++k)
        elems[k] = coeffs(k);

    for (int a = 0; a < q_; ++a) {
        std::vector<int> na(s_);
        for (int i = 0; i < s_; ++i)
            na[i] = (p_ - elems[a][i]) % p_;
        neg_[a] = index_of_coeffs(na);
        for (int b = 0; b < q_; ++b) {
            std::vector<int> sum(s_);
            for (int i = 0; i < s_; ++i)
                sum[i] = (elems[a][i] + elems[b][i]) % p_;
            add_[a * q_ + b] = index_of_coeffs(sum);
            mul_[a * q_ + b] = s_ == 1
                ? (a * b) % p_
                : index_of_coeffs(poly_mulmod(elems[a], elems[b], modulus_, p_, s_));
        }
    }

    // Tr(a) = a + a^p + ... + a^(p^(s-1)); lands in the prime subfield.
    for (int a = 0; a < q_; ++a) {
        int acc = 0;
        int power = a;
        for (int i = 0; i < s_; ++i) {
            acc = add_[acc * q_ + power];
            int next = power;
            for (int j = 1; j < p_; ++j)
                next = mul_[next * q_ + power];
            power = next;
        }
        std::vector<int> c = coeffs(acc);
        for (int i = 1; i < s_; ++i)
            if (c[i] != 0)
                throw error("trace computation left the prime subfield");
        trace_[a] = c[0];
    }
}

std::shared_ptr<const FieldSpec> FieldSpec::make(int q) {
    auto [p, s] = factor_prime_power(q);
    if (s == 1)
        return std::shared_ptr<const FieldSpec>(new FieldSpec(p, 1, {}));
    return make(q, default_modulus(q));
}

std::shared_ptr<const FieldSpec> FieldSpec::make(int q, const std::vector<int>& modulus) {
    auto [p, s] = factor_prime_power(q);
    if (s == 1) {
        if (!modulus.empty())
            throw input_error("prime fields take no modulus");
        return std::shared_ptr<const FieldSpec>(new FieldSpec(p, 1, {}));
    }
    if (static_cast<int>(modulus.size()) != s + 1)
        throw input_error("modulus must have degree " + std::to_string(s));
    if (modulus[s] != 1)
        throw input_error("modulus must be monic");
    for (int c : modulus)
        if (c < 0 || c >= p)
            throw input_error("modulus coefficients must lie in [0, " + std::to_string(p) + ")");
    // Degree 2 or 3: irreducible over F_p iff it has no root there.
    for (int x = 0; x < p; ++x) {
        int val = 0, xp = 1;
        for (int k = 0; k <= s; ++k) {
            val = (val + modulus[k] * xp) % p;
            xp = (xp * x) % p;
        }
        if (val == 0)
            throw input_error("modulus is reducible (root at " + std::to_string(x) + ")");
    }
    return std::shared_ptr<const FieldSpec>(new FieldSpec(p, s, modulus));
}

int FieldSpec::check(int a) const {
    if (a < 0 || a >= q_)
        throw error("field element index " + std::to_string(a) + " out of range");
    return a;
}

int FieldSpec::inv(int a) const {
    check(a);
    if (a == 0)
        throw error("division by zero in F_" + std::to_string(q_));
    // a^(q-2) by repeated squaring over the table.
    int result = 1, base = a, e = q_ - 2;
    while (e > 0) {
        if (e & 1) result = mul_[result * q_ + base];
        base = mul_[base * q_ + base];
        e >>= 1;
    }
    return result;
}

std::vector<int> FieldSpec::coeffs(int index) const {
    check(index);
    std::vector<int> c(s_);
    for (int i = 0; i < s_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return c;
}

int FieldSpec::index_of_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != s_)
        throw error("coefficient vector has wrong length");
    int index = 0, scale = 1;
    for (int i = 0; i < s_; ++i) {
        if (c[i] < 0 || c[i] >= p_)
            throw error("coefficient out of range");
        index += c[i] * scale;
        scale *= p_;
    }
    return index;
}

int FqElem::same(const FqElem& o) const {
    if (!(*spec_ == *o.spec_))
        throw error("field elements from different fields");
    return o.idx_;
}

} // namespace qenum
