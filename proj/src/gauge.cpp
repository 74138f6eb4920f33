#include "conegauge/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conegauge {

namespace {

using Sense = LpBuilder::Sense;

Cone reduce(Cone cone) {
  if (auto* h = std::get_if<HalfspaceCone>(&cone)) {
    if (!h->irredundant()) return eliminate_redundancy(*h);
  }
  return cone;
}

}  // namespace

Functional::Functional(std::size_t dim, Eval eval, std::string name)
    : dim_(dim), eval_(std::move(eval)), name_(std::move(name)) {
  if (dim_ == 0) throw InvalidArgument("functional dimension must be >= 1");
  if (!eval_) throw InvalidArgument("functional has no evaluator");
}

double Functional::operator()(const Vector& x) const {
  require_dim(x, dim_);
  return eval_(x);
}

GaugeNorm::GaugeNorm(Cone cone, Vector apex)
    : cone_(reduce(std::move(cone))), apex_(std::move(apex)) {
  require_dim(apex_, conegauge::dim(cone_));
  if (!is_proper_cone(cone_)) throw ConeNotProper();
  margin_ = interior_margin(cone_, -apex_);
  if (!(margin_ >= tolerance::kApexMargin)) throw ApexNotInterior(margin_);
  if (const auto* h = std::get_if<HalfspaceCone>(&cone_)) {
    for (const auto& a : h->normals()) denominators_.push_back(dot(a, apex_));
  }
  const double qu = gauge_eval(*this, apex_);
  if (std::abs(qu - 1.0) > tolerance::kFeasibility) {
    throw InvariantViolation("gauge of apex is " + std::to_string(qu) + ", not 1");
  }
}

std::optional<double> GaugeNorm::lipschitz_bound() const {
  if (denominators_.empty()) return std::nullopt;
  double l = 0.0;
  // Normals are unit length.
  for (double d : denominators_) l = std::max(l, 1.0 / std::abs(d));
  return l;
}

double GaugeNorm::operator()(const Vector& x) const { return gauge_eval(*this, x); }

double gauge_eval(const GaugeNorm& g, const Vector& x) {
  require_dim(x, g.dim());
  const auto* h = std::get_if<HalfspaceCone>(&g.cone());
  if (h == nullptr) return gauge_eval_oracle(g, x);
  // x in t(K + u)  <=>  a_i . x >= t d_i  for all i, with d_i < 0.
  double q = 0.0;
  const auto& d = g.denominators();
  for (std::size_t i = 0; i < d.size(); ++i) {
    q = std::max(q, dot(h->normals()[i], x) / d[i]);
  }
  return q;
}

double gauge_eval_oracle(const GaugeNorm& g, const Vector& x) {
  require_dim(x, g.dim());
  const Vector& u = g.apex();
  const std::size_t n = g.dim();
  LpBuilder lp;
  const std::size_t t = lp.add_variable(1.0);

  if (const auto* h = std::get_if<HalfspaceCone>(&g.cone())) {
    // a_i . x - t (a_i . u) >= 0
    for (const auto& a : h->normals()) {
      lp.add_row({{t, -dot(a, u)}}, Sense::ge, -dot(a, x));
    }
  } else {
    // x - t u = sum_j l_j g_j
    const auto& gens = std::get<GeneratorCone>(g.cone()).generators();
    const std::size_t lam0 = lp.num_vars();
    for (std::size_t j = 0; j < gens.size(); ++j) lp.add_variable(0.0);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<std::size_t, double>> terms;
      for (std::size_t j = 0; j < gens.size(); ++j) terms.emplace_back(lam0 + j, gens[j][i]);
      terms.emplace_back(t, u[i]);
      lp.add_row(std::move(terms), Sense::eq, x[i]);
    }
  }

  const LpSolution sol = lp_solve(lp.build());
  if (sol.status != LpStatus::optimal) {
    throw InvariantViolation("gauge LP not optimal for an interior apex");
  }
  return std::max(0.0, sol.z[t]);
}

Functional as_functional(const GaugeNorm& g) {
  return Functional(g.dim(), [g](const Vector& x) { return gauge_eval(g, x); },
                    "gauge");
}

Functional euclidean_norm(std::size_t n) {
  return Functional(n, [](const Vector& x) { return norm2(x); }, "euclidean");
}

Functional linear_functional(Vector c) {
  const std::size_t n = c.size();
  return Functional(n, [c = std::move(c)](const Vector& x) { return dot(c, x); },
                    "linear");
}

Functional symmetrize(const Functional& p) {
  return Functional(
      p.dim(), [p](const Vector& x) { return std::max(p(x), p(-x)); },
      p.name() + "^s");
}

bool kernel_contains(const Functional& p, const Vector& x, double tol) {
  return p(x) <= tol;
}

bool unit_ball_contains(const Functional& p, const Vector& x, bool strict,
                        double tol) {
  const double v = p(x);
  return strict ? v < 1.0 - tol : v <= 1.0 + tol;
}

std::vector<Vector> sphere_sample(const Functional& p, std::size_t count,
                                  std::uint64_t seed, double tol) {
  if (count == 0) throw InvalidArgument("sphere_sample: count must be >= 1");
  Sampler sampler(seed);
  std::vector<Vector> out;
  out.reserve(count);
  const std::size_t cap = 100 * count;
  for (std::size_t draws = 0; out.size() < count; ++draws) {
    if (draws >= cap) throw SamplingStarved();
    const Vector v = sampler.direction(p.dim());
    const double pv = p(v);
    if (pv > tol) out.push_back((1.0 / pv) * v);
  }
  return out;
}

std::vector<Vector> sphere_sample(const GaugeNorm& g, std::size_t count,
                                  std::uint64_t seed) {
  return sphere_sample(as_functional(g), count, seed);
}

CheckReport check_axioms(const Functional& p, const CheckOptions& options,
                         std::span<const Vector> extra_stencil) {
  if (options.samples == 0) throw InvalidArgument("check_axioms: samples must be >= 1");
  const std::size_t n = p.dim();
  const double tol = options.tol;
  ViolationTracker homogeneity("homogeneity", tol);
  ViolationTracker subadditivity("subadditivity", tol);
  ViolationTracker definiteness("definiteness", tol);

  auto check_homogeneous = [&](const Vector& x, double t) {
    const double px = p(x);
    const Vector tx = t * x;
    homogeneity.record(std::abs(p(tx) - t * px) / (1.0 + std::abs(px)), {&x});
  };
  auto check_subadditive = [&](const Vector& x, const Vector& y) {
    subadditivity.record(std::max(0.0, p(x + y) - p(x) - p(y)), {&x, &y});
  };
  auto check_definite = [&](const Vector& x) {
    const bool both_zero = p(x) <= tol && p(-x) <= tol;
    const double nx = norm2(x);
    definiteness.record(both_zero && nx > 10.0 * tol ? nx : 0.0, {&x});
  };

  const std::vector<Vector> probes = stencil(n, extra_stencil);
  for (const auto& x : probes) {
    for (double t : {0.0, 0.5, 2.0}) check_homogeneous(x, t);
    check_definite(x);
    for (const auto& y : probes) check_subadditive(x, y);
  }

  Sampler sampler(options.seed);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const Vector x = sampler.point(n);
    const Vector y = sampler.point(n);
    const double t = sampler.uniform(0.0, kSampleRadius);
    check_homogeneous(x, t);
    check_subadditive(x, y);
    check_definite(x);
  }

  CheckReport report;
  report.checks = {homogeneity.finish(), subadditivity.finish(), definiteness.finish()};
  return report;
}

}  // namespace conegauge
