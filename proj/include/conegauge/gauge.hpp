#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conegauge/check.hpp"
#include "conegauge/cone.hpp"

namespace conegauge {

/// Black-box functional X -> R. Evaluation must be deterministic.
class Functional {
 public:
  using Eval = std::function<double(const Vector&)>;

  Functional(std::size_t dim, Eval eval, std::string name = "functional");

  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  double operator()(const Vector& x) const;

 private:
  std::size_t dim_;
  Eval eval_;
  std::string name_;
};

/// The asymmetric norm q = gauge(K + u) of a proper cone K with respect to
/// its interior point -u. q(u) = 1 and {q = 0} = K.
class GaugeNorm {
 public:
  /// H-rep cones are reduced to an irredundant representation. Throws
  /// ConeNotProper, or ApexNotInterior when -u is closer than
  /// tolerance::kApexMargin to the boundary.
  GaugeNorm(Cone cone, Vector apex);

  std::size_t dim() const noexcept { return apex_.size(); }
  const Cone& cone() const noexcept { return cone_; }
  const Vector& apex() const noexcept { return apex_; }
  /// Lower bound on the distance from -u to the boundary of K.
  double apex_margin() const noexcept { return margin_; }
  /// d_i = a_i . u for H-rep cones (all negative); empty for V-rep.
  const std::vector<double>& denominators() const noexcept { return denominators_; }
  /// Lipschitz constant max_i |a_i| / |d_i| of q (H-rep only).
  std::optional<double> lipschitz_bound() const;

  double operator()(const Vector& x) const;

 private:
  Cone cone_;
  Vector apex_;
  double margin_ = 0.0;
  std::vector<double> denominators_;
};

/// H-rep: max(0, max_i (a_i . x) / d_i). V-rep: gauge_eval_oracle.
double gauge_eval(const GaugeNorm& g, const Vector& x);

/// min t >= 0 s.t. x - t u in K, solved as an LP.
double gauge_eval_oracle(const GaugeNorm& g, const Vector& x);

Functional as_functional(const GaugeNorm& g);
Functional euclidean_norm(std::size_t n);
/// x -> c . x (not nonnegative; used as a negative control).
Functional linear_functional(Vector c);

/// x -> max(p(x), p(-x)).
Functional symmetrize(const Functional& p);

/// p(x) <= tol.
bool kernel_contains(const Functional& p, const Vector& x,
                     double tol = tolerance::kFeasibility);

/// strict: p(x) < 1 - tol. closed: p(x) <= 1 + tol.
bool unit_ball_contains(const Functional& p, const Vector& x, bool strict,
                        double tol = tolerance::kFeasibility);

/// `count` points with p(x) = 1, from normalized random normal directions.
/// Throws SamplingStarved after 100 * count rejected draws.
std::vector<Vector> sphere_sample(const Functional& p, std::size_t count,
                                  std::uint64_t seed,
                                  double tol = tolerance::kFeasibility);
std::vector<Vector> sphere_sample(const GaugeNorm& g, std::size_t count,
                                  std::uint64_t seed);

/// Sampled audit of positive homogeneity, subadditivity and definiteness.
/// `extra_stencil` points (and negations) are probed in addition to 0, ±e_i.
CheckReport check_axioms(const Functional& p, const CheckOptions& options,
                         std::span<const Vector> extra_stencil = {});

}  // namespace conegauge
