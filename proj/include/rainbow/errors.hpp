#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural defect in a graph (loop, endpoint or color out of range).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// A constructor's precondition does not hold for the given input.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class NotAStarConfiguration : public HypothesisViolation {
 public:
  NotAStarConfiguration(int color, const std::string& why)
      : HypothesisViolation("color " + std::to_string(color) + " is not a spanning star: " + why),
        color_(color) {}
  int color() const noexcept { return color_; }

 private:
  int color_;
};

class CentersNotDistinct : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

class CentersNotAllEqual : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

class ClassesNotIdentical : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

class InvalidLatinSquare : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

class InvalidTwoCenterConfig : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

/// The search exceeded its node budget before finishing.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class OutOfSupportedRange : public Error {
 public:
  using Error::Error;
};

class CountUnavailable : public OutOfSupportedRange {
 public:
  explicit CountUnavailable(int n)
      : OutOfSupportedRange("rainbow star count unavailable for n = " + std::to_string(n)), n_(n) {}
  int n() const noexcept { return n_; }

 private:
  int n_;
};

class NotMatrixEncodable : public Error {
 public:
  using Error::Error;
};

/// Malformed graph document. `what()` carries a line or field locator.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rainbow
