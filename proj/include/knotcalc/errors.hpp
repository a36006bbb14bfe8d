#ifndef KNOTCALC_ERRORS_HPP
#define KNOTCALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotcalc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments to a constructor or operation (non-coprime torus
/// parameters, non-staircase polynomial, out-of-range inputs, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed text input; carries the offset where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& msg) : Error(msg), position_(0) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// The complex fails an invariant that every knot complex satisfies
/// (vertical homology rank one in grading zero, etc).
class NotKnotComplexError : public Error {
public:
    using Error::Error;
};

/// A size cap was exceeded (upsilon enumeration, brute-force oracles).
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// The simplified chain through the distinguished generator does not exist.
class NotStandardError : public Error {
public:
    using Error::Error;
};

/// Basis simplification failed to reach the required normal form.
class SimplifyError : public Error {
public:
    using Error::Error;
};

}  // namespace knotcalc

#endif
