#pragma once

#include <stdexcept>
#include <string>

namespace cnbethe {

/// Mismatched ranks or vector lengths.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested group rank exceeds the configured maximum.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Generator or particle index outside its valid range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point lies on a wedge boundary where no unique wedge label exists.
class BoundaryPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A finite-difference stencil or sample point leaves the required wedge.
class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation was called with inputs of the wrong kind.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cnbethe
