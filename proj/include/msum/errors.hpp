#pragma once

#include <stdexcept>
#include <string>

namespace msum {

/// Malformed input: bad set text, non-ascending seed, out-of-range parameter.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bound exceeds the configured universe cap or a mode cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that does not meet its precondition,
/// or a step of the constructive proof found its hypothesis violated.
class ConditionViolation : public std::runtime_error {
 public:
  ConditionViolation(std::string condition, const std::string& detail)
      : std::runtime_error(condition + ": " + detail),
        condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// A Lemma-1 style witness quintuple is not distinct or not contained in the set.
class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace msum
