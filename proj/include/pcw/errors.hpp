#pragma once

#include <stdexcept>
#include <string>

namespace pcw {

// Malformed or out-of-contract input (bad file, bad dimensions, bad symbols).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A bound was requested on a matrix that does not satisfy the bound's
// structural hypotheses (irregular, disconnected, non-unit entries, ...).
class HypothesesUnmetError : public std::runtime_error {
 public:
  explicit HypothesesUnmetError(const std::string& what)
      : std::runtime_error(what) {}
};

// Enumeration would exceed the configured candidate limit.
class InstanceTooLargeError : public std::runtime_error {
 public:
  InstanceTooLargeError(const std::string& what, double predicted)
      : std::runtime_error(what), predicted_size(predicted) {}

  double predicted_size;
};

}  // namespace pcw
