#include "conegauge/properness.hpp"

#include <cmath>

namespace conegauge {

namespace {

std::vector<Vector> probe_points(const Vector& u, const PropernessOptions& options) {
  std::vector<Vector> extra{u};
  extra.insert(extra.end(), options.extra_stencil.begin(), options.extra_stencil.end());
  return stencil(u.size(), extra);
}

std::vector<Vector> random_points(std::size_t n, const CheckOptions& options) {
  Sampler sampler(options.seed);
  std::vector<Vector> pts;
  pts.reserve(options.samples);
  for (std::size_t k = 0; k < options.samples; ++k) pts.push_back(sampler.point(n));
  return pts;
}

/// Kernel members drawn from the stencil and by rejection from random points.
std::vector<Vector> kernel_points(const Functional& p, const Vector& u,
                                  const PropernessOptions& options) {
  const double tol = options.check.tol;
  auto member = [&](const Vector& k) {
    return options.kernel_member ? options.kernel_member(k) : p(k) <= tol;
  };
  std::vector<Vector> out;
  for (const auto& k : probe_points(u, options)) {
    if (member(k)) out.push_back(k);
  }
  for (const auto& k : random_points(u.size(), options.check)) {
    if (member(k)) out.push_back(k);
  }
  return out;
}

void require_samples(const PropernessOptions& options) {
  if (options.check.samples == 0) throw InvalidArgument("samples must be >= 1");
}

}  // namespace

bool PropernessReport::all_pass() const {
  return condition_i.pass && condition_ii.pass && condition_iii_pass();
}

bool PropernessReport::all_fail() const {
  return !condition_i.pass && !condition_ii.pass && !condition_iii_pass();
}

void require_unit_apex(const Functional& p, const Vector& u, double tol) {
  require_dim(u, p.dim());
  const double pu = p(u);
  if (!(std::abs(pu - 1.0) <= tol)) {
    throw PreconditionViolation("apex precondition violated: p(u) = " +
                                std::to_string(pu) + ", expected 1");
  }
}

CheckResult check_condition_i(const Functional& p, const Vector& u,
                              const PropernessOptions& options) {
  require_samples(options);
  require_unit_apex(p, u, options.check.tol);
  ViolationTracker t("condition_i", options.check.tol);
  auto probe = [&](const Vector& x) { t.record(p(x - p(x) * u), {&x}); };
  for (const auto& x : probe_points(u, options)) probe(x);
  for (const auto& x : random_points(u.size(), options.check)) probe(x);
  return t.finish();
}

CheckResult check_condition_ii(const Functional& p, const Vector& u,
                               const PropernessOptions& options) {
  require_samples(options);
  require_unit_apex(p, u, options.check.tol);
  ViolationTracker t("condition_ii", options.check.tol);
  auto probe = [&](const Vector& x) { t.record(p(x - u), {&x}); };
  for (const auto& x : probe_points(u, options)) {
    const double px = p(x);
    if (px > options.check.tol) probe((1.0 / px) * x);
  }
  for (const auto& x : sphere_sample(p, options.check.samples, options.check.seed,
                                     options.check.tol)) {
    probe(x);
  }
  return t.finish();
}

std::pair<CheckResult, CheckResult> check_condition_iii(
    const Functional& p, const Vector& u, const PropernessOptions& options) {
  CheckResult forward = check_condition_i(p, u, options);
  forward.name = "condition_iii_fwd";

  // k = x - p(x) u is attained by x = k exactly when p(k) = 0.
  ViolationTracker backward("condition_iii_bwd", options.check.tol);
  const double unorm = norm2(u);
  for (const auto& k : kernel_points(p, u, options)) {
    backward.record(std::abs(p(k)) * unorm, {&k});
  }
  return {std::move(forward), backward.finish()};
}

PropernessReport verify_equivalence(const Functional& p, const Vector& u,
                                    const PropernessOptions& options) {
  PropernessReport r;
  r.condition_i = check_condition_i(p, u, options);
  r.condition_ii = check_condition_ii(p, u, options);
  auto [fwd, bwd] = check_condition_iii(p, u, options);
  r.condition_iii_fwd = std::move(fwd);
  r.condition_iii_bwd = std::move(bwd);
  r.candidate_apex = u;
  r.samples_used = options.check.samples;
  return r;
}

namespace {

PropernessOptions gauge_options(const GaugeNorm& g, const CheckOptions& options) {
  PropernessOptions opts;
  opts.check = options;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, HalfspaceCone>) {
          opts.extra_stencil = c.normals();
        } else {
          opts.extra_stencil = c.generators();
        }
      },
      g.cone());
  opts.kernel_member = [cone = g.cone()](const Vector& k) {
    return contains(cone, k, 0.0);
  };
  return opts;
}

}  // namespace

PropernessReport verify_equivalence(const GaugeNorm& g, const CheckOptions& options) {
  return verify_equivalence(as_functional(g), g.apex(), gauge_options(g, options));
}

CheckReport check_ball_translation(const Functional& p, const Vector& u,
                                   const PropernessOptions& options) {
  require_samples(options);
  require_unit_apex(p, u, options.check.tol);
  ViolationTracker ball("ball_minus_apex_in_kernel", options.check.tol);
  ViolationTracker kernel("kernel_plus_apex_in_ball", options.check.tol);

  // Points of B_p: sphere points scaled into [0, 1].
  Sampler radii(options.check.seed + 1);
  for (const auto& s : sphere_sample(p, options.check.samples, options.check.seed,
                                     options.check.tol)) {
    const Vector x = radii.uniform(0.0, 1.0) * s;
    ball.record(p(x - u), {&x});
  }
  for (const auto& k : kernel_points(p, u, options)) {
    kernel.record(std::max(0.0, p(k + u) - 1.0), {&k});
  }

  CheckReport report;
  report.checks = {ball.finish(), kernel.finish()};
  return report;
}

}  // namespace conegauge
