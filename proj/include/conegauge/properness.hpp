#pragma once

#include <functional>
#include <vector>

#include "conegauge/gauge.hpp"

namespace conegauge {

/// Sampled audit of the equivalent characterizations of a proper asymmetric
/// norm p with candidate apex u (p(u) = 1):
///   (i)   p(x - p(x) u) = 0 for all x
///   (ii)  p(x - u) = 0 for all x with p(x) = 1
///   (iii) {x - p(x) u} equals the kernel {p = 0}
struct PropernessReport {
  CheckResult condition_i;
  CheckResult condition_ii;
  CheckResult condition_iii_fwd;
  CheckResult condition_iii_bwd;
  Vector candidate_apex;
  std::size_t samples_used = 0;

  bool condition_iii_pass() const { return condition_iii_fwd.pass && condition_iii_bwd.pass; }
  bool all_pass() const;
  bool all_fail() const;
  /// The three conditions agree; disagreement means tolerance miscalibration.
  bool consistent() const { return all_pass() || all_fail(); }
};

struct PropernessOptions {
  CheckOptions check;
  /// Probed in addition to 0, ±e_i, ±u.
  std::vector<Vector> extra_stencil;
  /// Membership test used to draw kernel samples by rejection. When unset,
  /// a point is a kernel member iff p(k) <= tol.
  std::function<bool(const Vector&)> kernel_member;
};

/// Throws PreconditionViolation unless |p(u) - 1| <= tol.
void require_unit_apex(const Functional& p, const Vector& u, double tol);

CheckResult check_condition_i(const Functional& p, const Vector& u,
                              const PropernessOptions& options);
CheckResult check_condition_ii(const Functional& p, const Vector& u,
                               const PropernessOptions& options);
/// Returns {forward, backward} inclusions.
std::pair<CheckResult, CheckResult> check_condition_iii(
    const Functional& p, const Vector& u, const PropernessOptions& options);

PropernessReport verify_equivalence(const Functional& p, const Vector& u,
                                    const PropernessOptions& options);

/// Gauge-built variant: kernel samples come from the cone itself and the
/// stencil includes the cone's normals or generators.
PropernessReport verify_equivalence(const GaugeNorm& g, const CheckOptions& options);

/// The two inclusions B_p - u ⊆ K_p ⊆ B_p - u, on samples.
/// Returns {"ball_minus_apex_in_kernel", "kernel_plus_apex_in_ball"}.
CheckReport check_ball_translation(const Functional& p, const Vector& u,
                                   const PropernessOptions& options);

}  // namespace conegauge
