#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dezaforge {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A residue or vertex index outside its valid range.
class InvalidElement : public Error {
public:
  using Error::Error;
};

/// Matrix or permutation dimensions that do not fit together.
class ShapeError : public Error {
public:
  using Error::Error;
};

class NotAPermutation : public Error {
public:
  using Error::Error;
};

class InvalidConnectionSet : public Error {
public:
  using Error::Error;
};

class InvalidPair : public Error {
public:
  using Error::Error;
};

/// An operation was called on input that violates its documented contract.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Dual Seidel switching was requested on a graph/involution pair that does
/// not satisfy the switching hypotheses. The message names the failed check.
class SwitchingInapplicable : public Error {
public:
  using Error::Error;
};

/// A spectrum claim whose moment system has no nonnegative integral solution.
class InconsistentClaim : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace dezaforge
