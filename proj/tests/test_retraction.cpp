#include <cmath>

#include "conegauge/oracle.hpp"
#include "conegauge/retraction.hpp"
#include "doctest.h"

using namespace conegauge;

namespace {

const HalfspaceCone kOrthant({Vector{-1, 0}, Vector{0, -1}});

RetractionPair orthant_pair() { return build_pair(kOrthant, Vector{-1, -1}); }

}  // namespace

TEST_CASE("apply_R and apply_Q on the orthant") {
  const RetractionPair p = orthant_pair();
  const Vector x{-3, 2};
  CHECK(apply_R(p, x) == Vector{2, 2});
  CHECK(apply_Q(p, x) == Vector{-5, 0});
  CHECK(p.gauge()(Vector{-5, 0}) == 0.0);

  const Vector m{-2, -7};
  CHECK(apply_R(p, m) == Vector{0, 0});
  CHECK(apply_Q(p, m) == m);

  const Vector u = p.ray_direction();
  CHECK(apply_R(p, u) == u);
  CHECK(apply_Q(p, u) == Vector{0, 0});
  CHECK_THROWS_AS(apply_Q(p, Vector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("build_pair") {
  const RetractionPair o = orthant_pair();
  CHECK(o.ray_direction() == Vector{1, 1});
  const RetractionPair w = build_pair(fixture_by_name("wedge").cone_h, Vector{0, -1});
  Sampler s(2);
  for (int i = 0; i < 200; ++i) {
    const Vector x = s.point(2);
    CHECK(w.gauge()(x) == doctest::Approx(std::max(0.0, x[1] + std::abs(x[0]))));
    CHECK(o.gauge()(x) == std::max(0.0, std::max(x[0], x[1])));
  }
  CHECK_THROWS_AS(build_pair(HalfspaceCone({Vector{1, 0}}), Vector{1, 0}), ConeNotProper);
  CHECK_THROWS_AS(build_pair(kOrthant, Vector{0, -1}), ApexNotInterior);
}

TEST_CASE("audit passes for the orthant pair") {
  const CheckReport r = audit_retraction(orthant_pair(), CheckOptions{.samples = 10000, .tol = 1e-8});
  CHECK(r.all_pass());
  REQUIRE(r.checks.size() == std::size(kAuditChecks));
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    CHECK(r.checks[i].name == kAuditChecks[i]);
    CHECK_FALSE(r.checks[i].skipped);
  }
  CHECK(r.at("boundary_Q").evaluated > 1000);
}

TEST_CASE("audit of a V-rep pair skips the boundary and continuity probes") {
  const auto f = fixture_by_name("wedge");
  const CheckReport r =
      audit_retraction(build_pair(f.cone_v, -f.apex), CheckOptions{.samples = 300, .tol = 1e-8});
  CHECK(r.all_pass());
  CHECK(r.at("boundary_Q").skipped);
  CHECK_FALSE(r.at("boundary_Q").note.empty());
  CHECK(r.at("continuity").skipped);
}

TEST_CASE("polarity and boundary at specific points") {
  const RetractionPair p = orthant_pair();
  const Vector u = p.ray_direction();
  CHECK(apply_R(p, apply_Q(p, u)) == Vector{0, 0});
  CHECK(apply_Q(p, apply_R(p, u)) == Vector{0, 0});

  const HalfspaceCone& m = std::get<HalfspaceCone>(p.range_cone());
  const Vector qx = apply_Q(p, Vector{-3, 2});
  CHECK(on_boundary(m, qx));
  CHECK(active_facet(m, qx) == std::optional<std::size_t>{1});
}

TEST_CASE("decomposition, fixed points, -N in M and the boundary law") {
  for (const auto& f : fixture_suite()) {
    CAPTURE(f.name);
    const RetractionPair p = build_pair(f.cone_h, -f.apex);
    const auto& m = std::get<HalfspaceCone>(p.range_cone());
    Sampler s(13);
    for (int i = 0; i < 2000; ++i) {
      const Vector x = s.point(f.apex.size());
      const Vector qx = apply_Q(p, x);
      const Vector rx = apply_R(p, x);
      CHECK(norm_inf(qx + rx - x) <= 1e-12);
      const double q = p.gauge()(x);
      CHECK((norm_inf(qx - x) == 0.0) == (q <= 1e-9));
      if (q > 1e-3) CHECK(active_facet(m, qx, 1e-8).has_value());
      CHECK(p.gauge()(qx) <= 1e-9);
    }
    for (double t : {0.0, 0.5, 3.0, 10.0}) CHECK(p.gauge()(-t * f.apex) <= 1e-9);
  }
}

TEST_CASE("subadditivity_certificate") {
  const RetractionPair p = orthant_pair();
  const auto c = subadditivity_certificate(p, Vector{1, 0}, Vector{0, 1});
  CHECK(c.slack == 1.0);
  CHECK(c.order.difference == Vector{-1, -1});
  CHECK(c.order.member);
  CHECK(c.identity_residual == 0.0);

  const Vector zero{0, 0};
  const auto z = subadditivity_certificate(p, zero, -zero);
  CHECK(z.slack == 0.0);
  CHECK(z.order.difference == zero);

  const Vector x{0.3, -1.7};
  const auto same = subadditivity_certificate(p, x, x);
  CHECK(std::abs(same.slack) <= 1e-15);
  CHECK(norm2(same.order.difference) <= 1e-15);

  Sampler s(8);
  for (int i = 0; i < 500; ++i) {
    const auto r = subadditivity_certificate(p, s.point(2), s.point(2));
    CHECK(r.order.member);
    CHECK(r.slack >= -1e-9);
    CHECK(r.identity_residual <= 1e-12);
  }
}

TEST_CASE("black-box pairs") {
  const RetractionPair p = orthant_pair();
  const RetractionOps good = as_ops(p);
  const auto q = recover_functional(good, CheckOptions{.samples = 200});
  REQUIRE(q.has_value());
  CHECK((*q)(Vector{-3, 2}) == doctest::Approx(2.0));

  // Metric projection onto the ray: R is not subadditive and Q does not map
  // onto M.
  const Vector u{1, 1};
  RetractionOps metric{
      .dim = 2,
      .Q = [u](const Vector& x) { return x - std::max(0.0, dot(x, u) / 2.0) * u; },
      .R = [u](const Vector& x) { return std::max(0.0, dot(x, u) / 2.0) * u; },
      .range_cone = kOrthant,
      .ray = u,
      .lipschitz = std::nullopt,
      .extra_stencil = {},
  };
  const CheckReport r = audit_retraction(metric, CheckOptions{.samples = 500, .tol = 1e-8});
  CHECK_FALSE(r.all_pass());
  CHECK_FALSE(r.at("range_Q").pass);
  CHECK(r.at("idempotence_R").pass);

  // Identity as R has a two-dimensional range.
  RetractionOps identity = metric;
  identity.R = [](const Vector& x) { return x; };
  CHECK_FALSE(recover_functional(identity, CheckOptions{.samples = 50}).has_value());
}
