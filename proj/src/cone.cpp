#include "conegauge/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conegauge {

namespace {

using Sense = LpBuilder::Sense;

std::vector<Vector> normalize_rows(std::vector<Vector> rows, const char* what) {
  if (rows.empty()) {
    throw InvalidArgument(std::string("cone needs at least one ") + what);
  }
  const std::size_t n = rows.front().size();
  for (auto& r : rows) {
    require_dim(r, n);
    if (norm2(r) == 0.0) {
      throw InvalidArgument(std::string("zero ") + what + " in cone");
    }
    r = normalized(r);
  }
  return rows;
}

template <class F>
decltype(auto) visit_cone(const Cone& cone, F&& f) {
  return std::visit(std::forward<F>(f), cone);
}

/// Adds n free variables bounded by |x_j| <= 1; returns the first index.
std::size_t add_box_variables(LpBuilder& lp, std::size_t n) {
  const std::size_t first = lp.num_vars();
  for (std::size_t j = 0; j < n; ++j) lp.add_variable(0.0, true);
  for (std::size_t j = 0; j < n; ++j) {
    lp.add_row({{first + j, 1.0}}, Sense::le, 1.0);
    lp.add_row({{first + j, 1.0}}, Sense::ge, -1.0);
  }
  return first;
}

/// max r in [0, 1] with x + r d in K (V-rep).
double max_step(const GeneratorCone& cone, const Vector& x, const Vector& d) {
  const std::size_t n = cone.dim();
  const auto& g = cone.generators();
  LpBuilder lp;
  const std::size_t r = lp.add_variable(-1.0);
  const std::size_t lam0 = lp.num_vars();
  for (std::size_t j = 0; j < g.size(); ++j) lp.add_variable(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    // sum_j l_j g_j[i] - r d[i] = x[i]
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t j = 0; j < g.size(); ++j) terms.emplace_back(lam0 + j, g[j][i]);
    terms.emplace_back(r, -d[i]);
    lp.add_row(std::move(terms), Sense::eq, x[i]);
  }
  lp.add_row({{r, 1.0}}, Sense::le, 1.0);
  const LpSolution sol = lp_solve(lp.build());
  if (sol.status != LpStatus::optimal) return 0.0;
  return sol.z[r];
}

}  // namespace

HalfspaceCone::HalfspaceCone(std::vector<Vector> normals)
    : normals_(normalize_rows(std::move(normals), "normal")) {}

GeneratorCone::GeneratorCone(std::vector<Vector> generators)
    : generators_(normalize_rows(std::move(generators), "generator")) {}

std::size_t dim(const Cone& cone) {
  return visit_cone(cone, [](const auto& c) { return c.dim(); });
}

double membership_violation(const HalfspaceCone& cone, const Vector& x) {
  return std::max(0.0, -facet_margin(cone, x));
}

double membership_violation(const GeneratorCone& cone, const Vector& x) {
  require_dim(x, cone.dim());
  const auto& g = cone.generators();
  // min r  s.t.  -r <= x_i - (G l)_i <= r,  l >= 0
  LpBuilder lp;
  const std::size_t r = lp.add_variable(1.0);
  const std::size_t lam0 = lp.num_vars();
  for (std::size_t j = 0; j < g.size(); ++j) lp.add_variable(0.0);
  for (std::size_t i = 0; i < cone.dim(); ++i) {
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t j = 0; j < g.size(); ++j) terms.emplace_back(lam0 + j, g[j][i]);
    auto upper = terms;
    upper.emplace_back(r, -1.0);
    lp.add_row(std::move(upper), Sense::le, x[i]);
    terms.emplace_back(r, 1.0);
    lp.add_row(std::move(terms), Sense::ge, x[i]);
  }
  const LpSolution sol = lp_solve(lp.build());
  if (sol.status != LpStatus::optimal) {
    throw InvariantViolation("membership residual LP not optimal");
  }
  return std::max(0.0, sol.objective_value);
}

double membership_violation(const Cone& cone, const Vector& x) {
  return visit_cone(cone, [&](const auto& c) { return membership_violation(c, x); });
}

bool contains(const HalfspaceCone& cone, const Vector& x, double tol) {
  return facet_margin(cone, x) >= -tol;
}

bool contains(const GeneratorCone& cone, const Vector& x, double tol) {
  return membership_violation(cone, x) <= tol;
}

bool contains(const Cone& cone, const Vector& x, double tol) {
  return visit_cone(cone, [&](const auto& c) { return contains(c, x, tol); });
}

bool is_pointed(const HalfspaceCone& cone) {
  return rank(cone.normals()) == cone.dim();
}

bool is_pointed(const GeneratorCone& cone) {
  // max sum mu  s.t.  G mu = 0, 0 <= mu <= 1
  const auto& g = cone.generators();
  LpBuilder lp;
  for (std::size_t j = 0; j < g.size(); ++j) lp.add_variable(-1.0);
  for (std::size_t i = 0; i < cone.dim(); ++i) {
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t j = 0; j < g.size(); ++j) terms.emplace_back(j, g[j][i]);
    lp.add_row(std::move(terms), Sense::eq, 0.0);
  }
  for (std::size_t j = 0; j < g.size(); ++j) lp.add_row({{j, 1.0}}, Sense::le, 1.0);
  const LpSolution sol = lp_solve(lp.build());
  if (sol.status != LpStatus::optimal) {
    throw InvariantViolation("pointedness LP not optimal");
  }
  return -sol.objective_value <= tolerance::kFeasibility;
}

bool is_pointed(const Cone& cone) {
  return visit_cone(cone, [](const auto& c) { return is_pointed(c); });
}

Vector interior_point(const HalfspaceCone& cone) {
  // Chebyshev-style: max s  s.t.  a_i . x >= s,  |x_j| <= 1
  const std::size_t n = cone.dim();
  LpBuilder lp;
  const std::size_t x0 = add_box_variables(lp, n);
  const std::size_t s = lp.add_variable(-1.0, true);
  for (const auto& a : cone.normals()) {
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t j = 0; j < n; ++j) terms.emplace_back(x0 + j, a[j]);
    terms.emplace_back(s, -1.0);
    lp.add_row(std::move(terms), Sense::ge, 0.0);
  }
  const LpSolution sol = lp_solve(lp.build());
  if (sol.status != LpStatus::optimal || sol.z[s] <= tolerance::kFeasibility) {
    throw NotFullDimensional();
  }
  std::vector<double> x(sol.z.begin() + static_cast<std::ptrdiff_t>(x0),
                        sol.z.begin() + static_cast<std::ptrdiff_t>(x0 + n));
  return Vector(std::move(x));
}

Vector interior_point(const GeneratorCone& cone) {
  if (rank(cone.generators()) < cone.dim()) throw NotFullDimensional();
  Vector sum = Vector::zeros(cone.dim());
  for (const auto& g : cone.generators()) sum += g;
  return sum;
}

Vector interior_point(const Cone& cone) {
  return visit_cone(cone, [](const auto& c) { return interior_point(c); });
}

double facet_margin(const HalfspaceCone& cone, const Vector& x) {
  require_dim(x, cone.dim());
  double m = std::numeric_limits<double>::infinity();
  for (const auto& a : cone.normals()) m = std::min(m, dot(a, x));
  return m;
}

double interior_margin(const Cone& cone, const Vector& x) {
  if (const auto* h = std::get_if<HalfspaceCone>(&cone)) return facet_margin(*h, x);
  const auto& v = std::get<GeneratorCone>(cone);
  require_dim(x, v.dim());
  if (!contains(v, x, 0.0)) return -membership_violation(v, x);
  double r = 1.0;
  for (std::size_t j = 0; j < v.dim(); ++j) {
    const Vector e = Vector::unit(v.dim(), j);
    r = std::min(r, max_step(v, x, e));
    r = std::min(r, max_step(v, x, -e));
  }
  return r / std::sqrt(static_cast<double>(v.dim()));
}

bool is_proper_cone(const HalfspaceCone& cone) {
  if (!is_pointed(cone)) return false;
  try {
    interior_point(cone);
  } catch (const NotFullDimensional&) {
    return false;
  }
  return true;
}

bool is_proper_cone(const GeneratorCone& cone) {
  return is_pointed(cone) && rank(cone.generators()) == cone.dim();
}

bool is_proper_cone(const Cone& cone) {
  return visit_cone(cone, [](const auto& c) { return is_proper_cone(c); });
}

bool on_boundary(const HalfspaceCone& cone, const Vector& x, double tol) {
  if (!cone.irredundant()) {
    throw PreconditionViolation("on_boundary requires an irredundant cone");
  }
  const double m = facet_margin(cone, x);
  if (m < -tol) throw PreconditionViolation("on_boundary: point outside cone");
  return m <= tol;
}

std::optional<std::size_t> active_facet(const HalfspaceCone& cone,
                                        const Vector& x, double tol) {
  require_dim(x, cone.dim());
  std::size_t best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cone.normals().size(); ++i) {
    const double v = dot(cone.normals()[i], x);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  if (std::abs(best_val) <= tol) return best;
  return std::nullopt;
}

ConeOrderWitness order_witness(const Vector& x, const Vector& y,
                               const Cone& cone, double tol) {
  require_same_dim(x, y);
  require_dim(x, dim(cone));
  Vector diff = y - x;
  const bool member = contains(cone, diff, tol);
  return ConeOrderWitness{x, y, std::move(diff), member};
}

bool leq_cone(const Vector& x, const Vector& y, const Cone& cone, double tol) {
  return order_witness(x, y, cone, tol).member;
}

HalfspaceCone eliminate_redundancy(const HalfspaceCone& cone) {
  std::vector<Vector> kept;
  for (const auto& a : cone.normals()) {
    const bool dup = std::any_of(kept.begin(), kept.end(), [&](const Vector& b) {
      return norm_inf(a - b) <= 1e-12;
    });
    if (!dup) kept.push_back(a);
  }

  // Walk from the back so earlier normals win ties between equivalent rows.
  const std::size_t n = cone.dim();
  for (std::size_t i = kept.size(); i-- > 0;) {
    if (kept.size() == 1) break;
    LpBuilder lp;
    const std::size_t x0 = add_box_variables(lp, n);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j == i) continue;
      std::vector<std::pair<std::size_t, double>> terms;
      for (std::size_t c = 0; c < n; ++c) terms.emplace_back(x0 + c, kept[j][c]);
      lp.add_row(std::move(terms), Sense::ge, 0.0);
    }
    LpProblem p = lp.build();
    for (std::size_t c = 0; c < n; ++c) p.objective[x0 + c] = kept[i][c];
    const LpSolution sol = lp_solve(p);
    if (sol.status == LpStatus::optimal &&
        sol.objective_value >= -tolerance::kFeasibility) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  HalfspaceCone out(std::move(kept));
  out.irredundant_ = true;
  return out;
}

}  // namespace conegauge
