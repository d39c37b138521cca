#include "qenum/matrix.hpp"

#include "qenum/errors.hpp"

namespace qenum {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, unsigned prime)
    : rows_(rows), cols_(cols), e_(rows * cols, CycloNumber(prime)) {}

CMatrix CMatrix::identity(std::size_t n, unsigned prime) {
    CMatrix m(n, n, prime);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = CycloNumber::from_rational(Rational(1), prime);
    return m;
}

CMatrix CMatrix::from_rational_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty())
        throw error("matrix needs at least one row");
    CMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw error("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m.at(r, c) = CycloNumber::from_rational(rows[r][c]);
    }
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<CycloNumber>& d) {
    CMatrix m(d.size(), d.size(), d.empty() ? 2 : d[0].prime());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(i, i) = d[i];
    return m;
}

CycloNumber& CMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_)
        throw error("matrix index out of range");
    return e_[r * cols_ + c];
}

const CycloNumber& CMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw error("matrix index out of range");
    return e_[r * cols_ + c];
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw error("matrix shape mismatch in addition");
    CMatrix m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        m.e_[i] += o.e_[i];
    return m;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw error("matrix shape mismatch in subtraction");
    CMatrix m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        m.e_[i] -= o.e_[i];
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_)
        throw error("matrix shape mismatch in product");
    CMatrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const CycloNumber& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const CycloNumber& b = o.at(k, c);
                if (b.is_zero()) continue;
                m.at(r, c) += a * b;
            }
        }
    return m;
}

CMatrix CMatrix::operator*(const CycloNumber& s) const {
    CMatrix m(*this);
    for (auto& x : m.e_) x *= s;
    return m;
}

CMatrix CMatrix::operator*(const Rational& s) const {
    CMatrix m(*this);
    for (auto& x : m.e_) x = x * s;
    return m;
}

bool CMatrix::operator==(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(c, r) = at(r, c);
    return m;
}

CMatrix CMatrix::dagger() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(c, r) = at(r, c).conjugate();
    return m;
}

CycloNumber CMatrix::trace() const {
    if (rows_ != cols_)
        throw error("trace of non-square matrix");
    CycloNumber t;
    for (std::size_t i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

CycloNumber CMatrix::det() const {
    if (rows_ != cols_)
        throw error("determinant of non-square matrix");
    CMatrix a(*this);
    CycloNumber d = CycloNumber::from_rational(Rational(1));
    for (std::size_t col = 0; col < a.cols_; ++col) {
        std::size_t piv = col;
        while (piv < a.rows_ && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows_)
            return CycloNumber();
        if (piv != col) {
            for (std::size_t c = 0; c < a.cols_; ++c)
                std::swap(a.at(piv, c), a.at(col, c));
            d = -d;
        }
        d *= a.at(col, col);
        CycloNumber inv = a.at(col, col).inverse();
        for (std::size_t r = col + 1; r < a.rows_; ++r) {
            if (a.at(r, col).is_zero()) continue;
            CycloNumber f = a.at(r, col) * inv;
            for (std::size_t c = col; c < a.cols_; ++c)
                a.at(r, c) -= f * a.at(col, c);
        }
    }
    return d;
}

namespace {

// Row echelon elimination with first-nonzero pivots; returns pivot columns.
// Pivots are searched in the first `col_limit` columns only; row operations
// apply to the full width, so augmented columns are carried along.
std::vector<std::size_t> eliminate(CMatrix& a, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(piv, c), a.at(row, c));
        CycloNumber inv = a.at(row, col).inverse();
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a.at(row, c).is_zero()) a.at(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            CycloNumber f = a.at(r, col);
            for (std::size_t c = 0; c < a.cols(); ++c) {
                if (a.at(row, c).is_zero()) continue;
                a.at(r, c).submul(f, a.at(row, c));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t CMatrix::rank() const {
    CMatrix a(*this);
    return eliminate(a, a.cols()).size();
}

CMatrix CMatrix::inverse() const {
    if (rows_ != cols_)
        throw error("inverse of non-square matrix");
    CMatrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = CycloNumber::from_rational(Rational(1));
    }
    std::vector<std::size_t> pivots = eliminate(aug, cols_);
    if (pivots.size() != rows_)
        throw error("matrix is singular");
    CMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

CMatrix CMatrix::kron(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            if (a.at(ar, ac).is_zero()) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    if (b.at(br, bc).is_zero()) continue;
                    m.at(ar * b.rows() + br, ac * b.cols() + bc) = a.at(ar, ac) * b.at(br, bc);
                }
        }
    return m;
}

std::optional<std::vector<CycloNumber>> solve_linear_exact(
    const CMatrix& a, const std::vector<CycloNumber>& b) {
    if (b.size() != a.rows())
        throw error("right-hand side length mismatch");
    CMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> pivots = eliminate(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        if (!aug.at(r, a.cols()).is_zero())
            return std::nullopt;
    std::vector<CycloNumber> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

} // namespace qenum
