#pragma once

#include <stdexcept>
#include <string>

namespace qpl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class ZeroConstantTerm : public Error {
 public:
  ZeroConstantTerm() : Error("series denominator has zero constant term") {}
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// Parameters fall outside every regime with a known closed form.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// l_max is not classified for this (d, r).
class Unclassified : public Error {
 public:
  using Error::Error;
};

class NegativeCoefficient : public Error {
 public:
  using Error::Error;
};

/// A tangent character vanished; the weight assignment violated its invariants.
class ZeroCharacter : public Error {
 public:
  using Error::Error;
};

/// Two generators handed to a closure did not commute.
class NonCommuting : public Error {
 public:
  NonCommuting(std::size_t first, std::size_t second)
      : Error("generators " + std::to_string(first) + " and " + std::to_string(second) +
              " do not commute"),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class NotSpanning : public Error {
 public:
  NotSpanning() : Error("algebra image is a proper subspace") {}
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotDivisibleByGL : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same number disagreed.
class MismatchError : public Error {
 public:
  MismatchError(const std::string& what, std::string delta)
      : Error(what + " (delta " + delta + ")"), delta_(std::move(delta)) {}

  const std::string& delta() const noexcept { return delta_; }

 private:
  std::string delta_;
};

}  // namespace qpl
