#pragma once

#include "qenum/error_basis.hpp"
#include "qenum/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace qenum {

// zeta_p^k * X_a Z_b as it occurs in a stabilizer group closure.
struct PhasedLabel {
    int k;
    std::vector<int> a;
    std::vector<int> b;
};

// Trace-symplectic form sum_i Tr(a_i d_i) - Tr(b_i c_i) mod p for labels
// u = (a|b), v = (c|d).  Zero exactly when the two operators commute.
int symplectic_form(const ErrorLabel& u, const ErrorLabel& v);

class StabilizerCode {
public:
    // Line-oriented format with `#` comments:
    //   q <int>
    //   modulus <c0> ... <cs>    (extension fields only, before n)
    //   n <int>
    //   gen a1 .. an | b1 .. bn  (field element indices, one generator per line)
    static StabilizerCode parse(const std::string& text);

    const std::shared_ptr<const FieldSpec>& spec() const { return spec_; }
    int n() const { return n_; }
    long K() const { return K_; }
    const std::vector<ErrorLabel>& generators() const { return gens_; }
    // Closure under multiplication, identity first; one entry per label.
    const std::vector<PhasedLabel>& group() const { return group_; }

    // (1/|group|) * sum of the phased group elements; built on first use
    // and cached.  Needs q^(2n) dense entries within budget.
    const CMatrix& projector(long budget = kDefaultEnumBudget) const;

private:
    StabilizerCode() = default;

    std::shared_ptr<const FieldSpec> spec_;
    int n_ = 0;
    long K_ = 0;
    std::vector<ErrorLabel> gens_;
    std::vector<PhasedLabel> group_;
    mutable CMatrix projector_;
};

enum class Kind { B, Bperp, C, Cperp, D, Dperp };

// The six weight distributions of a code, exact.  B and C are dense by
// weight class; D keeps nonzero entries only.
struct EnumeratorSet {
    std::shared_ptr<const FieldSpec> spec;
    int n = 0;
    Rational K;
    std::vector<CycloNumber> B, Bperp;            // index = symplectic weight
    std::vector<CycloNumber> C, Cperp;            // (n+1)^2 row-major over (wt_X, wt_Z)
    std::map<IndexMatrix, CycloNumber> D, Dperp;

    bool operator==(const EnumeratorSet& o) const;
    bool operator!=(const EnumeratorSet& o) const { return !(*this == o); }
    bool all_rational_nonneg() const;
};

// Evaluates the defining trace sums against the dense projector, one
// error label at a time.
EnumeratorSet distributions_oracle(const StabilizerCode& code,
                                   long budget = kDefaultEnumBudget);

// Independent route: counts labels in the F_p-span of the generators
// (unprimed) and in its trace-symplectic dual (primed), scaled by 1/p.
EnumeratorSet distributions_symplectic(const StabilizerCode& code);

// Variable registry for complete enumerators: M_l_m, row-major over
// (lambda, mu) element indices.
std::vector<std::string> m_vars(int q);

// B -> sum B_i x^(n-i) y^i;  C -> sum C_ij x^(n-i) y^i z^(n-j) w^j;
// D -> sum D_J prod M_lm^J_lm.
MultiPoly enumerator_poly(const EnumeratorSet& es, Kind kind);

// M_0_0 -> x, every other M -> y.
MultiPoly specialize_D_to_B(const MultiPoly& d, int q);
// M_l_m -> (x if l=0 else y) * (z if m=0 else w).
MultiPoly specialize_D_to_C(const MultiPoly& d, int q);

} // namespace qenum
