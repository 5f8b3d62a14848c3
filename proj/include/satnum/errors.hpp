#pragma once

#include <stdexcept>
#include <string>

namespace satnum {

/// Malformed or out-of-range input (bad vertex index, unparsable pattern, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold (e.g. k < 5 for
/// the pendant-neighbourhood checker, or an unsaturated graph handed to an audit).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven structural statement failed on an input that satisfied its
/// premises. Either the implementation is wrong or the input was mislabelled.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace satnum
