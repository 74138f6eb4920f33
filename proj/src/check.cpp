#include "conegauge/check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conegauge {

bool CheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult& CheckReport::at(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw InvalidArgument("no check named " + std::string(name));
}

void ViolationTracker::record(double violation,
                              std::initializer_list<const Vector*> where) {
  ++evaluated_;
  // NaN counts as a violation.
  if (!(violation <= worst_)) {
    worst_ = std::isnan(violation) ? std::numeric_limits<double>::infinity()
                                   : violation;
    witness_.clear();
    for (const Vector* v : where) witness_.push_back(*v);
  }
}

CheckResult ViolationTracker::finish() const {
  CheckResult r;
  r.name = name_;
  r.tolerance = tol_;
  r.max_violation = worst_;
  r.evaluated = evaluated_;
  r.pass = worst_ <= tol_;
  if (!r.pass) r.witness = witness_;
  return r;
}

Vector Sampler::direction(std::size_t n) {
  std::vector<double> v(n);
  for (double& c : v) c = normal_(engine_);
  return Vector(std::move(v));
}

Vector Sampler::point(std::size_t n) {
  Vector v = direction(n);
  const double nv = norm2(v);
  if (nv == 0.0) return v;
  return (uniform(0.0, kSampleRadius) / nv) * v;
}

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::vector<Vector> stencil(std::size_t n, std::span<const Vector> extra) {
  std::vector<Vector> pts;
  pts.push_back(Vector::zeros(n));
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(Vector::unit(n, i));
    pts.push_back(-Vector::unit(n, i));
  }
  for (const auto& v : extra) {
    require_dim(v, n);
    pts.push_back(v);
    pts.push_back(-v);
  }
  return pts;
}

}  // namespace conegauge
