#include <cmath>

#include "conegauge/oracle.hpp"
#include "conegauge/properness.hpp"
#include "doctest.h"

using namespace conegauge;

namespace {

GaugeNorm orthant_gauge() {
  return GaugeNorm(HalfspaceCone({Vector{-1, 0}, Vector{0, -1}}), Vector{1, 1});
}

PropernessOptions plain(std::size_t samples = 2000) {
  PropernessOptions o;
  o.check = CheckOptions{.samples = samples, .seed = 42, .tol = 1e-9};
  return o;
}

}  // namespace

TEST_CASE("condition (i)") {
  const Functional q = as_functional(orthant_gauge());
  const CheckResult r = check_condition_i(q, Vector{1, 1}, plain());
  CHECK(r.pass);
  CHECK(r.max_violation == 0.0);

  const CheckResult e = check_condition_i(euclidean_norm(2), Vector{1, 0}, plain());
  CHECK_FALSE(e.pass);
  CHECK(e.max_violation >= std::sqrt(2.0));
  CHECK(e.witness.size() == 1);

  CHECK_THROWS_AS(check_condition_i(q, Vector{2, 2}, plain()), PreconditionViolation);
}

TEST_CASE("condition (ii)") {
  const Functional q = as_functional(orthant_gauge());
  CHECK(check_condition_ii(q, Vector{1, 1}, plain()).pass);
  const CheckResult e = check_condition_ii(euclidean_norm(2), Vector{1, 0}, plain());
  CHECK_FALSE(e.pass);
  // e2 is on the Euclidean sphere and |e2 - e1| = sqrt 2.
  CHECK(e.max_violation >= std::sqrt(2.0) - 1e-12);

  const Functional zero(2, [](const Vector& x) { return x == Vector{1, 0} ? 1.0 : 0.0; });
  CHECK_THROWS_AS(check_condition_ii(zero, Vector{1, 0}, plain(5)), SamplingStarved);
}

TEST_CASE("condition (iii)") {
  const GaugeNorm g = orthant_gauge();
  PropernessOptions o = plain();
  o.kernel_member = [&](const Vector& k) { return contains(g.cone(), k, 0.0); };
  auto [fwd, bwd] = check_condition_iii(as_functional(g), g.apex(), o);
  CHECK(fwd.pass);
  CHECK(bwd.pass);
  CHECK(bwd.evaluated > 100);

  auto [efwd, ebwd] = check_condition_iii(euclidean_norm(2), Vector{1, 0}, plain());
  CHECK_FALSE(efwd.pass);
  CHECK(ebwd.pass);
}

TEST_CASE("verify_equivalence on every fixture") {
  for (const auto& f : fixture_suite()) {
    CAPTURE(f.name);
    const GaugeNorm g(f.cone_h, f.apex);
    const PropernessReport r = verify_equivalence(g, CheckOptions{.samples = 2000});
    CHECK(r.all_pass());
    CHECK(r.consistent());
    CHECK(r.candidate_apex == f.apex);
  }
  const auto w = fixture_by_name("wedge");
  const PropernessReport rv =
      verify_equivalence(GaugeNorm(w.cone_v, w.apex), CheckOptions{.samples = 300});
  CHECK(rv.all_pass());
}

TEST_CASE("symmetric norms fail every condition") {
  for (std::size_t n : {1u, 2u, 3u}) {
    const Functional e = euclidean_norm(n);
    const Vector u = normalized(Vector::ones(n));
    const PropernessReport r = verify_equivalence(e, u, plain());
    CAPTURE(n);
    CHECK(r.all_fail());
    CHECK(r.consistent());
  }
  const Functional inf_norm(2, [](const Vector& x) { return norm_inf(x); }, "sup");
  CHECK(verify_equivalence(inf_norm, Vector{1, 1}, plain()).all_fail());
}

TEST_CASE("inconsistent tolerance is visible as a meta failure") {
  // A kernel predicate contradicting p makes (iii) fail while (i), (ii) pass.
  const GaugeNorm g = orthant_gauge();
  PropernessOptions o = plain(200);
  o.kernel_member = [](const Vector&) { return true; };
  const PropernessReport r = verify_equivalence(as_functional(g), g.apex(), o);
  CHECK(r.condition_i.pass);
  CHECK_FALSE(r.condition_iii_bwd.pass);
  CHECK_FALSE(r.consistent());
}

TEST_CASE("B_q - u and K_q coincide on samples") {
  for (const auto& f : fixture_suite()) {
    CAPTURE(f.name);
    const GaugeNorm g(f.cone_h, f.apex);
    PropernessOptions o = plain(1000);
    o.kernel_member = [&](const Vector& k) { return contains(g.cone(), k, 0.0); };
    CHECK(check_ball_translation(as_functional(g), g.apex(), o).all_pass());
  }
  const CheckReport e = check_ball_translation(euclidean_norm(2), Vector{1, 0}, plain(500));
  CHECK_FALSE(e.at("ball_minus_apex_in_kernel").pass);
}
