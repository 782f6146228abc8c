#pragma once

#include <stdexcept>
#include <string>

namespace chessplex {

/// Malformed parameters or inputs that violate a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or computation would exceed its configured resource guard.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate order or construction could not be certified.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chessplex
