#pragma once

#include <stdexcept>
#include <string>

namespace parhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list, pin or gadget text. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An operation was called on input outside its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A search or counting routine would exceed its configured budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A constructor whose correctness is proven produced an object that failed
/// re-verification. Always a bug.
class InternalContradiction : public Error {
public:
    using Error::Error;
};

}  // namespace parhom
