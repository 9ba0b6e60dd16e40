#pragma once

#include <stdexcept>
#include <string>

namespace bnsym {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed window text, JSON document or exponent list.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Two operands live in groups or rings of different rank.
class RankMismatch : public Error {
public:
  explicit RankMismatch(std::size_t a, std::size_t b)
      : Error("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// A computation would exceed a configured size guard.
class GuardError : public Error {
public:
  using Error::Error;
};

/// Argument outside the domain of an operation (e.g. k out of range,
/// unordered monomial, negative window where a permutation is required).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A polynomial that was required to be B_n-invariant is not.
class NotInvariant : public Error {
public:
  using Error::Error;
};

/// A mathematical invariant that must hold unconditionally was violated.
/// Indicates a bug; never caught internally.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace bnsym
