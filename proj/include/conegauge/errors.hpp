#pragma once

#include <stdexcept>
#include <string>

namespace conegauge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when a mathematically impossible state is reached (e.g. an
/// infeasible gauge LP for an interior apex).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Simplex exceeded its iteration cap.
class LpStalled : public Error {
 public:
  using Error::Error;
};

class NotFullDimensional : public Error {
 public:
  NotFullDimensional() : Error("not full-dimensional") {}
};

class ConeNotProper : public Error {
 public:
  ConeNotProper() : Error("cone not proper") {}
};

class ApexNotInterior : public Error {
 public:
  explicit ApexNotInterior(double margin)
      : Error("apex not interior (margin " + std::to_string(margin) + ")"),
        margin_(margin) {}
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

class SamplingStarved : public Error {
 public:
  SamplingStarved() : Error("sphere sampling starved") {}
};

}  // namespace conegauge
