#pragma once

#include <memory>
#include <string>
#include <vector>

namespace qenum {

// Finite field F_q, q = p^s, with arithmetic tables indexed by the
// canonical element order.  Element k has polynomial-basis coefficients
// (c_0, ..., c_{s-1}) with k = sum c_i * p^i, i.e. the constant
// coefficient is the fastest-varying digit; in particular element 0 is
// the zero and element 1 the one of the field.
//
// Supported orders: every prime q, plus q in {4, 8, 9} with default
// moduli t^2+t+1, t^3+t+1 and t^2+1.  A caller-provided monic
// irreducible modulus of the right degree may replace the default.
class FieldSpec {
public:
    static std::shared_ptr<const FieldSpec> make(int q);
    static std::shared_ptr<const FieldSpec> make(int q, const std::vector<int>& modulus);

    int p() const { return p_; }
    int s() const { return s_; }
    int q() const { return q_; }
    // Coefficients c0..cs of the defining polynomial; empty for s = 1.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[check(b)])]; }
    int neg(int a) const { return neg_[check(a)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    // Absolute trace F_q -> F_p, returned as an integer in [0, p).
    int trace(int a) const { return trace_[check(a)]; }

    std::vector<int> coeffs(int index) const;
    int index_of_coeffs(const std::vector<int>& c) const;

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
    }

private:
    FieldSpec(int p, int s, std::vector<int> modulus);
    int check(int a) const;
    int idx(int a, int b) const { return check(a) * q_ + check(b); }

    int p_, s_, q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, trace_;
};

// Field element as (spec, index); the spec must outlive the element.
class FqElem {
public:
    FqElem(std::shared_ptr<const FieldSpec> spec, int index)
        : spec_(std::move(spec)), idx_(index) {}

    int index() const { return idx_; }
    const FieldSpec& field() const { return *spec_; }
    std::vector<int> coeffs() const { return spec_->coeffs(idx_); }
    int trace() const { return spec_->trace(idx_); }
    bool is_zero() const { return idx_ == 0; }

    FqElem operator+(const FqElem& o) const { return with(spec_->add(idx_, same(o))); }
    FqElem operator-(const FqElem& o) const { return with(spec_->sub(idx_, same(o))); }
    FqElem operator*(const FqElem& o) const { return with(spec_->mul(idx_, same(o))); }
    FqElem operator/(const FqElem& o) const { return with(spec_->div(idx_, same(o))); }
    FqElem operator-() const { return with(spec_->neg(idx_)); }

    bool operator==(const FqElem& o) const { return idx_ == same(o); }
    bool operator!=(const FqElem& o) const { return !(*this == o); }

private:
    FqElem with(int i) const { return FqElem(spec_, i); }
    int same(const FqElem& o) const;

    std::shared_ptr<const FieldSpec> spec_;
    int idx_;
};

} // namespace qenum
