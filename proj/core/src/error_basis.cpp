#include "qenum/error_basis.hpp"

#include "qenum/errors.hpp"

#include <numeric>

namespace qenum {

bool ErrorLabel::is_identity() const {
    for (int x : a)
        if (x != 0) return false;
    for (int x : b)
        if (x != 0) return false;
    return true;
}

int IndexMatrix::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::string IndexMatrix::str() const {
    std::string out;
    for (int l = 0; l < q_; ++l)
        for (int m = 0; m < q_; ++m) {
            int c = at(l, m);
            if (c == 0) continue;
            if (!out.empty()) out += " ";
            out += "J[" + std::to_string(l) + "," + std::to_string(m) +
                   "]=" + std::to_string(c);
        }
    return out.empty() ? "J=0" : out;
}

WeightTriple weights(const ErrorLabel& e) {
    WeightTriple w{0, 0, 0};
    for (int i = 0; i < e.n(); ++i) {
        if (e.a[i] != 0 || e.b[i] != 0) ++w.swt;
        if (e.a[i] != 0) ++w.wx;
        if (e.b[i] != 0) ++w.wz;
    }
    return w;
}

IndexMatrix index_matrix(const ErrorLabel& e) {
    IndexMatrix j(e.spec->q());
    for (int i = 0; i < e.n(); ++i)
        ++j.at(e.a[i], e.b[i]);
    return j;
}

std::vector<ErrorLabel> enumerate_errors(std::shared_ptr<const FieldSpec> spec, int n,
                                         long budget) {
    if (n < 1)
        throw error("length must be positive");
    const int q = spec->q();
    long count = 1;
    for (int i = 0; i < 2 * n; ++i) {
        count *= q;
        if (count > budget)
            throw budget_error("error enumeration needs q^(2n) = " +
                               std::to_string(count) + "+ labels, budget is " +
                               std::to_string(budget));
    }
    std::vector<ErrorLabel> out;
    out.reserve(count);
    for (long m = 0; m < count; ++m) {
        ErrorLabel e{spec, std::vector<int>(n), std::vector<int>(n)};
        long rest = m;
        for (int i = n - 1; i >= 0; --i) {
            e.b[i] = static_cast<int>(rest % q);
            rest /= q;
        }
        for (int i = n - 1; i >= 0; --i) {
            e.a[i] = static_cast<int>(rest % q);
            rest /= q;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ErrorLabel> by_wt(const std::vector<ErrorLabel>& labels, int i) {
    std::vector<ErrorLabel> out;
    for (const auto& e : labels)
        if (weights(e).swt == i) out.push_back(e);
    return out;
}

std::vector<ErrorLabel> by_xz(const std::vector<ErrorLabel>& labels, int i, int j) {
    std::vector<ErrorLabel> out;
    for (const auto& e : labels) {
        WeightTriple w = weights(e);
        if (w.wx == i && w.wz == j) out.push_back(e);
    }
    return out;
}

std::vector<ErrorLabel> by_index(const std::vector<ErrorLabel>& labels, const IndexMatrix& j) {
    std::vector<ErrorLabel> out;
    for (const auto& e : labels)
        if (index_matrix(e) == j) out.push_back(e);
    return out;
}

namespace {

// X_alpha Z_beta on one factor: column x carries zeta_p^Tr(beta*x) into row x+alpha.
CMatrix site_matrix(const FieldSpec& f, int alpha, int beta) {
    const int q = f.q();
    const unsigned p = static_cast<unsigned>(f.p());
    CMatrix e(q, q, p);
    for (int x = 0; x < q; ++x)
        e.at(f.add(x, alpha), x) = CycloNumber::root_of_unity(p, f.trace(f.mul(beta, x)));
    return e;
}

} // namespace

CMatrix operator_matrix(const ErrorLabel& e, long budget) {
    const int q = e.spec->q();
    long entries = 1;
    for (int i = 0; i < 2 * e.n(); ++i) {
        entries *= q;
        if (entries > budget)
            throw budget_error("dense operator needs " + std::to_string(entries) +
                               "+ entries, budget is " + std::to_string(budget));
    }
    CMatrix m = site_matrix(*e.spec, e.a[0], e.b[0]);
    for (int i = 1; i < e.n(); ++i)
        m = CMatrix::kron(m, site_matrix(*e.spec, e.a[i], e.b[i]));
    return m;
}

} // namespace qenum
