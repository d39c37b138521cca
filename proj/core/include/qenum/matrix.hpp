#pragma once

#include "qenum/cyclo.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace qenum {

// Dense matrix over cyclotomic numbers.  All elimination-based routines
// (inverse, det, rank, solve) use exact division with deterministic
// first-nonzero pivot selection, so results are reproducible bit for bit.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols, unsigned prime = 2);

    static CMatrix identity(std::size_t n, unsigned prime = 2);
    static CMatrix from_rational_rows(const std::vector<std::vector<Rational>>& rows);
    static CMatrix diagonal(const std::vector<CycloNumber>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    CycloNumber& at(std::size_t r, std::size_t c);
    const CycloNumber& at(std::size_t r, std::size_t c) const;

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator*(const CycloNumber& s) const;
    CMatrix operator*(const Rational& s) const;

    bool operator==(const CMatrix& o) const;
    bool operator!=(const CMatrix& o) const { return !(*this == o); }

    CMatrix transpose() const;
    // Conjugate transpose; conjugation maps zeta to zeta^(p-1).
    CMatrix dagger() const;

    CycloNumber trace() const;
    CycloNumber det() const;
    std::size_t rank() const;
    // Throws on singular or non-square input.
    CMatrix inverse() const;

    static CMatrix kron(const CMatrix& a, const CMatrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<CycloNumber> e_;
};

// Solves A x = b exactly.  Returns one solution when the system is
// consistent (free variables are set to zero), std::nullopt otherwise.
std::optional<std::vector<CycloNumber>> solve_linear_exact(
    const CMatrix& a, const std::vector<CycloNumber>& b);

} // namespace qenum
