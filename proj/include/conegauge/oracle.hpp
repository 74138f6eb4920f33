#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conegauge/cone.hpp"

namespace conegauge {

/// One bisection step: t_lo is outside the feasible ray, t_hi inside.
struct BracketStep {
  double lo;
  double hi;
  bool lo_feasible;
  bool hi_feasible;
};

/// inf{t >= 0 : x - t u in K} by bisection on cone membership alone.
/// Requires -u strictly inside K. The returned value is the feasible end of a
/// bracket no wider than `tol`. When `trace` is given every bracket is
/// appended to it.
double gauge_by_bisection(const Cone& cone, const Vector& u, const Vector& x,
                          double tol = tolerance::kBisection,
                          std::vector<BracketStep>* trace = nullptr);

/// A proper cone shipped in both representations with an interior apex.
struct Fixture {
  std::string name;
  HalfspaceCone cone_h;
  GeneratorCone cone_v;
  Vector apex;
  std::optional<std::string> closed_form;
  /// Evaluates the closed form when one exists.
  std::function<double(const Vector&)> closed_form_eval;
};

/// halfline, orthant2, orthant3, orthant6, wedge, circular16.
std::vector<Fixture> fixture_suite();

/// Throws InvalidArgument for unknown names.
Fixture fixture_by_name(const std::string& name);

}  // namespace conegauge
