#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qvar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad dimensions, unknown names, non-positive thresholds.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Arithmetic that has no value in Q ∪ {+inf}, e.g. 0 * inf or finite - inf.
class UndefinedArithmetic : public Error {
 public:
  using Error::Error;
};

/// A solver refused to run because a theorem hypothesis fails on the instance.
/// `witness` holds the point indices exhibiting the failure.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::string hypothesis, std::vector<std::size_t> witness,
                      const std::string& detail)
      : Error(hypothesis + ": " + detail),
        hypothesis_(std::move(hypothesis)),
        witness_(std::move(witness)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string hypothesis_;
  std::vector<std::size_t> witness_;
};

}  // namespace qvar
