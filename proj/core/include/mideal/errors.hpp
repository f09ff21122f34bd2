#ifndef MIDEAL_ERRORS_HPP
#define MIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mideal {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands live in different ambient rings, or a monomial's arity
/// does not match the ring it is used with.
class RingMismatchError : public Error {
public:
  explicit RingMismatchError(const std::string& what) : Error(what) {}
};

/// An operation's mathematical precondition was violated (zero-ideal
/// divisor, non-square-free input to a dual, k = 0 power, ...).
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Exponent arithmetic would wrap.
class OverflowError : public Error {
public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

/// A configurable resource cap was exceeded (lcm lattice size, subset
/// enumeration width). Signals the instance is beyond desk scale.
class CapExceededError : public Error {
public:
  explicit CapExceededError(const std::string& what) : Error(what) {}
};

/// Malformed ideal or graph text.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace mideal

#endif
