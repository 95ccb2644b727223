#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvalg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different carriers (e.g. elements of two distinct chains).
class IncompatibleCarriers : public Error {
 public:
  using Error::Error;
};

/// Tables are malformed: wrong dimensions or indices out of range.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An axiom failed on concrete elements. `witness` holds the offending
/// carrier indices in the order the axiom names them (x, y[, z]).
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::size_t> witness);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::size_t> witness_;
};

/// Input is outside the domain of the operation (improper ideal, trivial
/// algebra where a nontrivial one is needed, non-regular algebra, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t cap)
      : Error(what), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A JSON document does not match the published schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A self-check on a computed object failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Default cap on the number of carrier elements of a finite algebra.
inline constexpr std::size_t kDefaultMaxSize = 4096;

/// Default cap on the truncation length of symbolic products.
inline constexpr std::size_t kDefaultMaxTruncation = 16;

}  // namespace mvalg
