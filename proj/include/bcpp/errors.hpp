#pragma once

#include <stdexcept>

namespace bcpp {

// Malformed instance, packing, file, or option combination.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact solver or oracle was asked to handle more charts than it supports.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A solver produced a packing that does not validate. Always a bug.
class ValidationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bcpp
