#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace nilcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (lengths, ambient dimensions, squareness).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A map fails to preserve a subspace it is required to preserve.
/// `witness` is the index of a basis vector whose image escapes.
class NotInvariantError : public Error {
 public:
  NotInvariantError(const std::string& what, std::size_t witness)
      : Error(what), witness_(witness) {}

  std::size_t witness() const noexcept { return witness_; }

 private:
  std::size_t witness_;
};

/// Input violates a mathematical precondition (non-nilpotent, det != 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilcert
