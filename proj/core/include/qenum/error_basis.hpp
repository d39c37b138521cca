#pragma once

#include "qenum/fq.hpp"
#include "qenum/matrix.hpp"

#include <string>
#include <vector>

namespace qenum {

// Symplectic label (a|b) of the operator X_a Z_b on n tensor factors.
// Entries are field element indices into the shared spec.
struct ErrorLabel {
    std::shared_ptr<const FieldSpec> spec;
    std::vector<int> a;
    std::vector<int> b;

    int n() const { return static_cast<int>(a.size()); }
    bool is_identity() const;
    bool operator==(const ErrorLabel& o) const { return a == o.a && b == o.b; }
};

struct WeightTriple {
    int swt;
    int wx;
    int wz;
};

// q x q table counting tensor slots by their (a_i, b_i) pair.
// Entries sum to the length n.
class IndexMatrix {
public:
    explicit IndexMatrix(int q) : q_(q), counts_(q * q, 0) {}

    int q() const { return q_; }
    int at(int lambda, int mu) const { return counts_[lambda * q_ + mu]; }
    int& at(int lambda, int mu) { return counts_[lambda * q_ + mu]; }
    int total() const;

    bool operator==(const IndexMatrix& o) const {
        return q_ == o.q_ && counts_ == o.counts_;
    }
    bool operator<(const IndexMatrix& o) const { return counts_ < o.counts_; }

    // "J[l,m]=c" entries for nonzero counts, row-major; "J=0" never occurs
    // for labels of positive length.
    std::string str() const;

private:
    int q_;
    std::vector<int> counts_;
};

WeightTriple weights(const ErrorLabel& e);
IndexMatrix index_matrix(const ErrorLabel& e);

inline constexpr long kDefaultEnumBudget = 4096;

// All q^(2n) labels, ordered as 2n base-q digits a_1 .. a_n b_1 .. b_n
// with b_n fastest.  Requires q^(2n) <= budget.
std::vector<ErrorLabel> enumerate_errors(std::shared_ptr<const FieldSpec> spec, int n,
                                         long budget = kDefaultEnumBudget);

std::vector<ErrorLabel> by_wt(const std::vector<ErrorLabel>& labels, int i);
std::vector<ErrorLabel> by_xz(const std::vector<ErrorLabel>& labels, int i, int j);
std::vector<ErrorLabel> by_index(const std::vector<ErrorLabel>& labels, const IndexMatrix& j);

// Dense q^n x q^n matrix of X_a Z_b over Q(zeta_p), built as the Kronecker
// product of single-factor matrices with the first factor most significant.
// Requires q^(2n) entries <= budget.
CMatrix operator_matrix(const ErrorLabel& e, long budget = kDefaultEnumBudget);

} // namespace qenum
