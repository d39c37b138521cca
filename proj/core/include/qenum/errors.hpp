#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qenum {

// Base class for all recoverable errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Anything wrong with user-supplied input: malformed files, values out of
// range, budgets too small for the requested computation.  The CLI maps
// this category to exit code 2.
class input_error : public error {
public:
    using error::error;
};

// Malformed textual input (code files, polynomial syntax). Carries a
// 1-based position so callers can point at the offending byte.
class parse_error : public input_error {
public:
    parse_error(const std::string& msg, std::size_t line, std::size_t col)
        : input_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                      ": " + msg),
          line(line), col(col) {}

    std::size_t line;
    std::size_t col;
};

// Raised when an operation would exceed the configured enumeration or
// dense-matrix budget.
class budget_error : public input_error {
public:
    using input_error::input_error;
};

// Raised by expression extraction when the input polynomial is not fixed
// by the group action of the requested case.
class not_invariant_error : public error {
public:
    using error::error;
};

} // namespace qenum
