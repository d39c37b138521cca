#include "qenum/rational.hpp"

#include "qenum/errors.hpp"

#include <cctype>

namespace qenum {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw input_error("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '-')
        ++i;
    bool saw_digit = false, saw_slash = false;
    for (; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            saw_digit = true;
        } else if (text[i] == '/' && !saw_slash && saw_digit) {
            saw_slash = true;
            saw_digit = false;
        } else {
            throw input_error("malformed rational literal '" + text + "'");
        }
    }
    if (!saw_digit)
        throw input_error("malformed rational literal '" + text + "'");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw input_error("malformed rational literal '" + text + "'");
    if (r.get_den() == 0)
        throw input_error("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    // base is canonical, so num^e / den^e already is.
    return out;
}

} // namespace qenum
