#pragma once

#include <stdexcept>
#include <string>

namespace bhh {

/// Malformed or mathematically invalid input (bad syntax, singular matrix,
/// non-positive weights, an element that is not a symmetry, ...).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or search would exceed the configured size bound.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold exactly did not: an inexact division, a failed
/// cross-check between two independent routes, a broken lattice invariant.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace bhh
