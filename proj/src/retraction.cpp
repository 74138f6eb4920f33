#include "conegauge/retraction.hpp"

#include <algorithm>
#include <cmath>

namespace conegauge {

RetractionPair build_pair(Cone cone, const Vector& minus_u) {
  return RetractionPair(GaugeNorm(std::move(cone), -minus_u));
}

Vector apply_R(const RetractionPair& pair, const Vector& x) {
  return gauge_eval(pair.gauge(), x) * pair.ray_direction();
}

Vector apply_Q(const RetractionPair& pair, const Vector& x) {
  return x - gauge_eval(pair.gauge(), x) * pair.ray_direction();
}

RetractionOps as_ops(const RetractionPair& pair) {
  std::vector<Vector> extra{pair.ray_direction()};
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, HalfspaceCone>) {
          extra.insert(extra.end(), c.normals().begin(), c.normals().end());
        } else {
          extra.insert(extra.end(), c.generators().begin(), c.generators().end());
        }
      },
      pair.range_cone());
  return RetractionOps{
      .dim = pair.dim(),
      .Q = [pair](const Vector& x) { return apply_Q(pair, x); },
      .R = [pair](const Vector& x) { return apply_R(pair, x); },
      .range_cone = pair.range_cone(),
      .ray = pair.ray_direction(),
      .lipschitz = pair.gauge().lipschitz_bound(),
      .extra_stencil = std::move(extra),
  };
}

double ray_distance(const Vector& v, const Vector& u) {
  const double t = dot(v, u) / dot(u, u);
  if (t <= 0.0) return norm2(v);
  return norm2(v - t * u);
}

CheckReport audit_retraction(const RetractionOps& ops, const CheckOptions& options) {
  if (options.samples == 0) throw InvalidArgument("samples must be >= 1");
  const std::size_t n = ops.dim;
  if (dim(ops.range_cone) != n) throw DimensionMismatch(n, dim(ops.range_cone));
  require_dim(ops.ray, n);
  const double tol = options.tol;
  const Vector& u = ops.ray;
  const double uu = dot(u, u);
  const auto* facets = std::get_if<HalfspaceCone>(&ops.range_cone);

  ViolationTracker idem_q("idempotence_Q", tol), idem_r("idempotence_R", tol);
  ViolationTracker pol_qr("polarity_QR", tol), pol_rq("polarity_RQ", tol);
  ViolationTracker range_q("range_Q", tol), range_r("range_R", tol);
  ViolationTracker boundary("boundary_Q", tol), homog("homogeneity", tol);
  ViolationTracker sub_q("subadditivity_Q", tol), sub_r("subadditivity_R", tol);
  ViolationTracker continuity("continuity", tol);

  auto scalar = [&](const Vector& rx) { return dot(rx, u) / uu; };

  auto single = [&](const Vector& x, double t) {
    const Vector qx = ops.Q(x);
    const Vector rx = ops.R(x);
    idem_q.record(norm2(ops.Q(qx) - qx), {&x});
    idem_r.record(norm2(ops.R(rx) - rx), {&x});
    pol_qr.record(norm2(ops.Q(rx)), {&x});
    pol_rq.record(norm2(ops.R(qx)), {&x});
    range_q.record(membership_violation(ops.range_cone, qx), {&x});
    range_r.record(ray_distance(rx, u), {&x});
    if (facets != nullptr && scalar(rx) > kOutsideRangeThreshold) {
      boundary.record(std::abs(facet_margin(*facets, qx)), {&x});
    }
    const Vector tx = t * x;
    const double hq = norm2(ops.Q(tx) - t * qx) / (1.0 + norm2(qx));
    const double hr = norm2(ops.R(tx) - t * rx) / (1.0 + norm2(rx));
    homog.record(std::max(hq, hr), {&x});
  };

  auto pairwise = [&](const Vector& x, const Vector& y) {
    const Vector s = x + y;
    const Vector dq = ops.Q(x) + ops.Q(y) - ops.Q(s);
    sub_q.record(membership_violation(ops.range_cone, dq), {&x, &y});
    const Vector dr = ops.R(x) + ops.R(y) - ops.R(s);
    sub_r.record(ray_distance(dr, u), {&x, &y});
    if (ops.lipschitz) {
      const double gap = std::abs(scalar(ops.R(x)) - scalar(ops.R(y)));
      const double bound = *ops.lipschitz * norm2(x - y);
      continuity.record(std::max(0.0, gap - bound) / (1.0 + bound), {&x, &y});
    }
  };

  const std::vector<Vector> probes = stencil(n, ops.extra_stencil);
  for (const auto& x : probes) {
    single(x, 2.0);
    for (const auto& y : probes) pairwise(x, y);
  }

  Sampler sampler(options.seed);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Vector x = sampler.point(n);
    const Vector y = sampler.point(n);
    const double t = sampler.uniform(0.0, kSampleRadius);
    single(x, t);
    pairwise(x, y);
    // Nearby pair for the Lipschitz probe.
    const Vector near = x + (1e-3 * sampler.uniform(0.0, 1.0)) * sampler.direction(n);
    if (ops.lipschitz) pairwise(x, near);
  }

  CheckReport report;
  report.checks = {idem_q.finish(), idem_r.finish(),   pol_qr.finish(),
                   pol_rq.finish(), range_q.finish(),  range_r.finish(),
                   boundary.finish(), homog.finish(),  sub_q.finish(),
                   sub_r.finish(),  continuity.finish()};
  if (facets == nullptr) {
    auto& b = report.checks[6];
    b.skipped = true;
    b.note = "boundary test skipped: range cone has no halfspace representation";
  }
  if (!ops.lipschitz) {
    auto& c = report.checks[10];
    c.skipped = true;
    c.note = "continuity probe skipped: no Lipschitz bound available";
  }
  return report;
}

CheckReport audit_retraction(const RetractionPair& pair, const CheckOptions& options) {
  return audit_retraction(as_ops(pair), options);
}

SubadditivityCertificate subadditivity_certificate(const RetractionPair& pair,
                                                   const Vector& x, const Vector& y,
                                                   double tol) {
  require_dim(x, pair.dim());
  require_dim(y, pair.dim());
  const GaugeNorm& q = pair.gauge();
  const Vector& u = pair.ray_direction();
  SubadditivityCertificate cert{
      order_witness(apply_Q(pair, x + y), apply_Q(pair, x) + apply_Q(pair, y),
                    pair.range_cone(), tol),
      0.0, 0.0};
  cert.slack = q(x) + q(y) - q(x + y);
  cert.identity_residual = norm2(cert.order.difference - cert.slack * (-u));
  return cert;
}

std::optional<Functional> recover_functional(const RetractionOps& ops,
                                             const CheckOptions& options) {
  Sampler sampler(options.seed);
  std::vector<Vector> images;
  for (const auto& x : stencil(ops.dim, ops.extra_stencil)) images.push_back(ops.R(x));
  for (std::size_t k = 0; k < options.samples; ++k) {
    images.push_back(ops.R(sampler.point(ops.dim)));
  }
  if (rank(images) > 1) return std::nullopt;
  const Vector u = ops.ray;
  const double uu = dot(u, u);
  return Functional(
      ops.dim, [R = ops.R, u, uu](const Vector& x) { return dot(R(x), u) / uu; },
      "recovered");
}

}  // namespace conegauge
