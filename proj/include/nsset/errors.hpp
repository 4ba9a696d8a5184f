#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nsset {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (bad syntax). Carries a locus such as "file:12" or
/// "file#/values/bright".
class ParseError : public Error {
 public:
  ParseError(std::string locus, const std::string& message)
      : Error(locus + ": " + message), locus_(std::move(locus)) {}
  const std::string& locus() const { return locus_; }

 private:
  std::string locus_;
};

/// Well-formed input with invalid content (range violation, unknown
/// reference, duplicate, ...).
class ValidationError : public Error {
 public:
  ValidationError(std::string locus, const std::string& message)
      : Error(locus + ": " + message), locus_(std::move(locus)) {}
  const std::string& locus() const { return locus_; }

 private:
  std::string locus_;
};

/// Operands live over different universes or parameter sets.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// A parameter identifier was not found in the set it was looked up in.
class UnknownParameterError : public DomainMismatchError {
 public:
  using DomainMismatchError::DomainMismatchError;
};

/// A group pipeline was invoked with no decision makers.
class EmptyPanelError : public ValidationError {
 public:
  explicit EmptyPanelError(const std::string& locus)
      : ValidationError(locus, "panel contains no decision makers") {}
};

/// File system problem (missing file, unreadable, unwritable).
class IoError : public Error {
 public:
  using Error::Error;
};

/// A computed value violated an invariant that valid inputs cannot violate.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nsset
