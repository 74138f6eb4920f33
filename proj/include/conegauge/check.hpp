#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conegauge/numeric.hpp"

namespace conegauge {

/// Outcome of one sampled property check. pass <=> max_violation <= tol.
struct CheckResult {
  std::string name;
  bool pass = true;
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::size_t evaluated = 0;
  /// Point(s) attaining the worst violation; empty when the check passed.
  std::vector<Vector> witness;
  bool skipped = false;
  std::string note;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// Throws InvalidArgument for unknown names.
  const CheckResult& at(std::string_view name) const;
};

struct CheckOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  double tol = tolerance::kFeasibility;
};

/// Tracks the worst violation seen for one check.
class ViolationTracker {
 public:
  ViolationTracker(std::string name, double tol) : name_(std::move(name)), tol_(tol) {}

  void record(double violation, std::initializer_list<const Vector*> where);
  CheckResult finish() const;

 private:
  std::string name_;
  double tol_;
  double worst_ = 0.0;
  std::size_t evaluated_ = 0;
  std::vector<Vector> witness_;
};

/// Seeded point generator: standard normal directions scaled by a uniform
/// radius in [0, 10].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  Vector point(std::size_t n);
  /// Standard normal vector (unscaled).
  Vector direction(std::size_t n);
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline constexpr double kSampleRadius = 10.0;

/// Deterministic probe points: 0, ±e_i, then `extra` and their negations.
std::vector<Vector> stencil(std::size_t n, std::span<const Vector> extra = {});

}  // namespace conegauge
