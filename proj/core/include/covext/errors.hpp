#pragma once

#include <stdexcept>
#include <string>

namespace covext {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word or map references a generator outside its alphabet, or two
/// operands live over different alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search or closure was asked to go beyond its hard limits.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A monodromy representation fails a relator or is malformed.
class InvalidRep : public Error {
 public:
  using Error::Error;
};

/// The representation is not transitive, so the cover is not connected.
class NotConnected : public Error {
 public:
  using Error::Error;
};

class NotAnExtension : public Error {
 public:
  using Error::Error;
};

/// The surjectivity hypothesis on the inclusion was declared but is refuted
/// by a necessary condition.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

/// Numerical computations that did not reach their accuracy target.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

class TrackingFailure : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

/// A fiber was requested too close to the branch locus.
class BranchProximity : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

class NotSquarefree : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

class NotSmooth : public Error {
 public:
  using Error::Error;
};

/// Scenario payload failed validation; `pointer()` is a JSON pointer to the
/// offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what);
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace covext
