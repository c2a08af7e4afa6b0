#pragma once

#include <stdexcept>
#include <string>

namespace qrtrig {

/// Precondition violated by the caller (bad modulus, wrong residue class, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact quantity that must exist by construction did not (non-square
/// s_p^2, missing representation). Always signals a bug or a false claim.
class IntegrityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A trigonometric function was asked for its value at a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// More than one algebraic candidate lies inside the tolerance window.
class AmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup of an unknown identifier.
class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace qrtrig
