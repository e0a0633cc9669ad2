#pragma once

#include <stdexcept>
#include <string>

namespace gproj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Invalid input data (bad quiver, non-composable relation, unknown vertex, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The path basis grew past the configured cap: the algebra is not finite dimensional.
class InfiniteDimensional : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A randomized plus exhaustive search ended without a certificate either way.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

/// A precondition with mathematical content failed (e.g. a module is not Gorenstein projective).
class HypothesisFailed : public Error {
 public:
  using Error::Error;
};

/// Should never happen when the documented hypotheses hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gproj
