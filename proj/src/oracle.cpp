#include "conegauge/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace conegauge {

double gauge_by_bisection(const Cone& cone, const Vector& u, const Vector& x,
                          double tol, std::vector<BracketStep>* trace) {
  require_dim(u, dim(cone));
  require_dim(x, dim(cone));
  if (!(tol > 0.0)) throw InvalidArgument("bisection tolerance must be positive");
  if (!contains(cone, -u, 0.0)) {
    throw PreconditionViolation("bisection requires -u inside the cone");
  }
  auto feasible = [&](double t) { return contains(cone, x - t * u, 0.0); };
  if (feasible(0.0)) return 0.0;

  // Feasible t form an upward-closed ray; find a power of two inside it.
  double lo = 0.0;
  double hi = 1.0;
  for (int k = 0; !feasible(hi); ++k) {
    if (k > 1100) throw InvariantViolation("bisection found no feasible bound");
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tol) {
    if (trace) trace->push_back({lo, hi, feasible(lo), feasible(hi)});
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (feasible(mid) ? hi : lo) = mid;
  }
  if (trace) trace->push_back({lo, hi, feasible(lo), feasible(hi)});
  return hi;
}

namespace {

Fixture orthant(std::size_t n) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(-Vector::unit(n, i));
  return Fixture{
      .name = "orthant" + std::to_string(n),
      .cone_h = HalfspaceCone(rows),
      .cone_v = GeneratorCone(rows),
      .apex = Vector::ones(n),
      .closed_form = "max(0, max_i x_i)",
      .closed_form_eval =
          [](const Vector& x) {
            return std::max(0.0, *std::max_element(x.begin(), x.end()));
          },
  };
}

Fixture halfline() {
  return Fixture{
      .name = "halfline",
      .cone_h = HalfspaceCone({Vector{-1.0}}),
      .cone_v = GeneratorCone({Vector{-1.0}}),
      .apex = Vector{1.0},
      .closed_form = "max(0, x)",
      .closed_form_eval = [](const Vector& x) { return std::max(0.0, x[0]); },
  };
}

Fixture wedge() {
  // {x : x2 <= -|x1|}
  return Fixture{
      .name = "wedge",
      .cone_h = HalfspaceCone({Vector{-1.0, -1.0}, Vector{1.0, -1.0}}),
      .cone_v = GeneratorCone({Vector{1.0, -1.0}, Vector{-1.0, -1.0}}),
      .apex = Vector{0.0, 1.0},
      .closed_form = "max(0, x2 + |x1|)",
      .closed_form_eval =
          [](const Vector& x) { return std::max(0.0, x[1] + std::abs(x[0])); },
  };
}

Fixture circular16() {
  // Polyhedral cone inscribed in {x : |(x1, x2)| <= -x3}, 16 extreme rays at
  // equal angles; facets come from consecutive ray pairs.
  constexpr std::size_t kRays = 16;
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < kRays; ++k) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / kRays;
    gens.push_back(Vector{std::cos(th), std::sin(th), -1.0});
  }
  const Vector axis{0.0, 0.0, -1.0};
  std::vector<Vector> normals;
  for (std::size_t k = 0; k < kRays; ++k) {
    const Vector& a = gens[k];
    const Vector& b = gens[(k + 1) % kRays];
    Vector c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]};
    if (dot(c, axis) < 0.0) c = -c;
    normals.push_back(c);
  }
  return Fixture{
      .name = "circular16",
      .cone_h = HalfspaceCone(std::move(normals)),
      .cone_v = GeneratorCone(std::move(gens)),
      .apex = Vector{0.0, 0.0, 1.0},
      .closed_form = std::nullopt,
      .closed_form_eval = {},
  };
}

}  // namespace

std::vector<Fixture> fixture_suite() {
  std::vector<Fixture> out;
  out.push_back(halfline());
  out.push_back(orthant(2));
  out.push_back(orthant(3));
  out.push_back(orthant(6));
  out.push_back(wedge());
  out.push_back(circular16());
  return out;
}

Fixture fixture_by_name(const std::string& name) {
  for (auto& f : fixture_suite()) {
    if (f.name == name) return f;
  }
  throw InvalidArgument("unknown fixture: " + name);
}

}  // namespace conegauge
