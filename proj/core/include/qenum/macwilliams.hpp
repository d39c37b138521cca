#pragma once

#include "qenum/stabilizer.hpp"

namespace qenum {

struct TransformContext {
    std::shared_ptr<const FieldSpec> spec;
    int n = 0;
    Rational K;
};

// B(x,y) = (1/(q^n K)) * Bperp(x + (q^2-1)y, x - y).
MultiPoly mac_B(const MultiPoly& f, const TransformContext& ctx);

// C(x,y,z,w) = (1/K) * Cperp(z + (q-1)w, z - w, (x + (q-1)y)/q, (x - y)/q).
// The transform exchanges the X and Z blocks; this is the specialization
// of the complete-enumerator identity and is the form that holds for
// codes whose X and Z distributions differ.
MultiPoly mac_C(const MultiPoly& f, const TransformContext& ctx);

// The q^2 x q^2 dual-variable matrix L with
// L[(l',m')][(l,m)] = (1/q) * zeta_p^Tr(a_l' a_m - a_l a_m'),
// rows and columns indexed row-major like m_vars.
CMatrix mac_dual_vars(const FieldSpec& f);
CMatrix mac_dual_vars(int q);

// D(M) = (1/K) * Dperp(M^perp), each M variable replaced by its L-row combination.
MultiPoly mac_D(const MultiPoly& f, const TransformContext& ctx);

// True iff D = (1/K) * Dperp as exact polynomial identity.  When that
// holds, the B- and C-level consequences are asserted too; a violation
// there throws instead of returning.
bool check_formally_self_dual(const EnumeratorSet& es);
bool check_formally_self_dual(const StabilizerCode& code);

} // namespace qenum
