#pragma once

#include "qenum/poly.hpp"

#include <string>
#include <vector>

namespace qenum {

// The four worked invariant-ring cases:
//   Weight      - two variables (x, y), any supported q
//   Double      - four variables (x, y, z, w), any supported q
//   CompleteQ2  - four M variables, q = 2 fixed
//   CompleteQ3  - nine M variables over Q(zeta_3), q = 3 fixed
enum class CaseId { Weight, Double, CompleteQ2, CompleteQ3 };

struct Relation {
    std::string name;     // e.g. "g5^2 - g3*g4"
    MultiPoly witness;    // expands to the zero polynomial
};

struct CheckResult {
    std::string name;
    bool pass;
};

// One invariant-ring case: the generating matrix of the group, the
// diagonalizing conjugation sigma ~ tau via T, and the polynomial
// generators of the invariant ring obtained by transfer.
struct InvariantCase {
    CaseId id;
    int q = 0;
    std::vector<std::string> vars;

    // Row i is the substitution image of vars[i]; check_invariance and
    // express_in_generators act through this matrix.
    CMatrix action;
    // The matrix as displayed; differs from `action` for Double (where the
    // action is its inverse) and CompleteQ3 (inverse transpose).
    CMatrix sigma;
    CMatrix tau;
    CMatrix T;

    // Double only: the matrix of the induced map on the span of
    // u1 = xz, u2 = yw, v1 = xw, v2 = yz (columns are images).
    CMatrix induced;
    std::vector<std::string> u_vars;

    std::vector<std::string> gen_names;
    std::vector<unsigned> gen_degrees;
    std::vector<MultiPoly> generators;
    std::vector<Relation> relations;
};

// q is required for Weight/Double and must be 0 or the fixed value for
// the complete cases.
InvariantCase build_case(CaseId id, int q = 0);

// Rebuilds the generator list from T's rows (linear forms, their squares
// and products per case, with the case's normalizing scalars applied).
std::vector<MultiPoly> transfer_generators(const InvariantCase& c);

// True iff substituting the case action into f returns f unchanged.
bool check_invariance(const MultiPoly& f, const InvariantCase& c);

// Every exact identity the case asserts: the matrix identities for
// sigma/tau/T, invariance of all generators, vanishing of all relation
// witnesses, plus per-case extras (Jacobian, induced-matrix match,
// dual-variable-matrix match, fixed monomials under sigma^2).
std::vector<CheckResult> verify_case(const InvariantCase& c);

// Polynomial in the generator names; exponent vectors follow gen_names.
struct GeneratorExpression {
    MultiPoly expr;

    std::string str() const { return expr.str(); }
    MultiPoly evaluate(const InvariantCase& c) const { return expr.substitute(c.generators); }
};

// Writes an invariant f exactly as a polynomial in the case generators,
// in normal form (exponent of g5 at most 1 for Double; total exponent of
// f10, f11, f12 at most 1 for CompleteQ3).  The result is certified by
// re-expansion before it is returned.  Throws not_invariant_error when f
// is not fixed by the action, input_error when deg f exceeds max_degree.
GeneratorExpression express_in_generators(const MultiPoly& f, const InvariantCase& c,
                                          unsigned max_degree = 8);

} // namespace qenum
