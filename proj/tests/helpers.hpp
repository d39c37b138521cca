#pragma once

#include "qenum/corpus.hpp"
#include "qenum/macwilliams.hpp"
#include "qenum/stabilizer.hpp"

#include <string>

namespace qtest {

using namespace qenum;

inline MultiPoly bpoly(const std::string& text) {
    return parse_poly(text, {"x", "y"});
}

inline MultiPoly cpoly(const std::string& text) {
    return parse_poly(text, {"x", "y", "z", "w"});
}

inline MultiPoly dpoly(const std::string& text, int q) {
    return parse_poly(text, m_vars(q), static_cast<unsigned>(FieldSpec::make(q)->p()));
}

inline TransformContext ctx_of(const StabilizerCode& code, const EnumeratorSet& es) {
    return TransformContext{code.spec(), code.n(), es.K};
}

} // namespace qtest
