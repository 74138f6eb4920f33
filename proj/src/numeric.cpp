#include "conegauge/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace conegauge {

namespace {

void require_finite(const std::vector<double>& coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw InvalidArgument("vector coordinate is not finite");
    }
  }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("vector must have length >= 1");
  require_finite(coords_);
}

Vector::Vector(std::initializer_list<double> coords)
    : Vector(std::vector<double>(coords)) {}

Vector Vector::zeros(std::size_t n) {
  if (n == 0) throw InvalidArgument("vector must have length >= 1");
  return Vector(Unchecked{}, std::vector<double>(n, 0.0));
}

Vector Vector::ones(std::size_t n) {
  if (n == 0) throw InvalidArgument("vector must have length >= 1");
  return Vector(Unchecked{}, std::vector<double>(n, 1.0));
}

Vector Vector::unit(std::size_t n, std::size_t i) {
  Vector e = zeros(n);
  e.coords_.at(i) = 1.0;
  return e;
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other[i];
  return *this;
}

Vector& Vector::operator*=(double t) {
  for (double& c : coords_) c *= t;
  return *this;
}

Vector operator+(Vector x, const Vector& y) { return x += y; }
Vector operator-(Vector x, const Vector& y) { return x -= y; }
Vector operator*(double t, Vector x) { return x *= t; }
Vector operator*(Vector x, double t) { return x *= t; }

Vector operator-(const Vector& x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
  return Vector(Vector::Unchecked{}, std::move(out));
}

void require_same_dim(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
}

void require_dim(const Vector& x, std::size_t n) {
  if (x.size() != n) throw DimensionMismatch(n, x.size());
}

double dot(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(const Vector& x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

double norm_inf(const Vector& x) {
  double m = 0.0;
  for (double c : x) m = std::max(m, std::abs(c));
  return m;
}

Vector normalized(const Vector& x) {
  const double n = norm2(x);
  if (n == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  return (1.0 / n) * x;
}

std::size_t rank(std::span<const Vector> rows, double rel_tol) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<double>> m;
  m.reserve(rows.size());
  double scale = 0.0;
  for (const auto& r : rows) {
    require_dim(r, cols);
    m.push_back(r.data());
    scale = std::max(scale, norm_inf(r));
  }
  if (scale == 0.0) return 0;
  const double eps = rel_tol * scale;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
    }
    if (std::abs(m[piv][c]) <= eps) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const double f = m[i][c] / m[r][c];
      if (f == 0.0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Simplex

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;

class Tableau {
 public:
  // Rows of [A | I_art | b]; last row of `obj_` is the reduced-cost row.
  Tableau(std::vector<std::vector<double>> a, std::vector<double> b,
          std::size_t structural)
      : structural_(structural) {
    const std::size_t m = a.size();
    cols_ = structural + m + 1;
    rows_.assign(m, std::vector<double>(cols_, 0.0));
    basis_.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < structural; ++j) rows_[r][j] = a[r][j];
      rows_[r][structural + r] = 1.0;
      rows_[r][cols_ - 1] = b[r];
      basis_[r] = structural + r;
    }
    obj_.assign(cols_, 0.0);
  }

  std::size_t rhs_col() const { return cols_ - 1; }
  bool is_artificial(std::size_t j) const { return j >= structural_; }

  void set_phase1_costs() {
    std::fill(obj_.begin(), obj_.end(), 0.0);
    for (const auto& row : rows_) {
      for (std::size_t j = 0; j < structural_; ++j) obj_[j] -= row[j];
      obj_[rhs_col()] -= row[rhs_col()];
    }
  }

  void set_phase2_costs(const std::vector<double>& c) {
    std::fill(obj_.begin(), obj_.end(), 0.0);
    for (std::size_t j = 0; j < structural_; ++j) obj_[j] = c[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t b = basis_[r];
      const double cb = b < structural_ ? c[b] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) obj_[j] -= cb * rows_[r][j];
    }
  }

  /// Current objective value (the reduced-cost row stores its negation).
  double value() const { return -obj_[rhs_col()]; }

  enum class Outcome { optimal, unbounded };

  Outcome run(bool allow_artificial, std::size_t& iterations) {
    for (;;) {
      // Bland: lowest-index improving column enters.
      std::size_t enter = cols_;
      const std::size_t limit = allow_artificial ? cols_ - 1 : structural_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (obj_[j] < -kCostEps) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return Outcome::optimal;

      // Bland: among minimum ratios, lowest basic index leaves.
      std::size_t leave = rows_.size();
      double best = 0.0;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const double coef = rows_[r][enter];
        if (coef <= kPivotEps) continue;
        const double ratio = rows_[r][rhs_col()] / coef;
        if (leave == rows_.size() || ratio < best - 1e-14 * (1.0 + std::abs(best)) ||
            (std::abs(ratio - best) <= 1e-14 * (1.0 + std::abs(best)) &&
             basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return Outcome::unbounded;

      if (++iterations > kLpIterationCap) {
        throw LpStalled("simplex stalled: iteration cap " +
                        std::to_string(kLpIterationCap) + " exceeded");
      }
      pivot(leave, enter);
    }
  }

  /// Pivots basic artificials out where possible; drops rows that are
  /// linearly dependent on the others.
  void expel_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (!is_artificial(basis_[r])) {
        ++r;
        continue;
      }
      std::size_t col = structural_;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (std::abs(rows_[r][j]) > 1e-9) {
          col = j;
          break;
        }
      }
      if (col < structural_) {
        pivot(r, col);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  std::vector<double> primal() const {
    std::vector<double> z(structural_, 0.0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < structural_) z[basis_[r]] = rows_[r][rhs_col()];
    }
    return z;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const double p = prow[c];
    for (double& v : prow) v /= p;
    prow[c] = 1.0;
    auto eliminate = [&](std::vector<double>& row) {
      const double f = row[c];
      if (f == 0.0) return;
      for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * prow[j];
      row[c] = 0.0;
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(obj_);
    basis_[r] = c;
  }

  std::size_t structural_;
  std::size_t cols_ = 0;
  std::vector<std::vector<double>> rows_;
  std::vector<double> obj_;
  std::vector<std::size_t> basis_;
};

void validate(const LpProblem& p) {
  const std::size_t k = p.num_vars();
  const std::size_t m = p.num_rows();
  if (k == 0) throw InvalidArgument("LP has no variables");
  if (k > kLpMaxVars || m > kLpMaxRows) {
    throw InvalidArgument("LP exceeds desk-scale limits (" + std::to_string(m) +
                          " rows, " + std::to_string(k) + " variables)");
  }
  if (p.rhs.size() != m) throw DimensionMismatch(m, p.rhs.size());
  if (!p.free.empty() && p.free.size() != k) {
    throw DimensionMismatch(k, p.free.size());
  }
  for (const auto& row : p.a) {
    if (row.size() != k) throw DimensionMismatch(k, row.size());
    for (double v : row) {
      if (!std::isfinite(v)) throw InvalidArgument("LP matrix entry not finite");
    }
  }
  for (double v : p.rhs) {
    if (!std::isfinite(v)) throw InvalidArgument("LP rhs entry not finite");
  }
  for (double v : p.objective) {
    if (!std::isfinite(v)) throw InvalidArgument("LP objective not finite");
  }
}

}  // namespace

LpSolution lp_solve(const LpProblem& problem) {
  validate(problem);
  const std::size_t k = problem.num_vars();
  const std::size_t m = problem.num_rows();

  // Free variables are split as z = z+ - z-.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos_col(k), neg_col(k, kNone);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < k; ++j) {
    pos_col[j] = cols++;
    if (!problem.free.empty() && problem.free[j]) neg_col[j] = cols++;
  }

  std::vector<std::vector<double>> a(m, std::vector<double>(cols, 0.0));
  std::vector<double> b(problem.rhs);
  std::vector<double> c(cols, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    c[pos_col[j]] = problem.objective[j];
    if (neg_col[j] != kNone) c[neg_col[j]] = -problem.objective[j];
  }
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    b[r] *= sign;
    for (std::size_t j = 0; j < k; ++j) {
      a[r][pos_col[j]] = sign * problem.a[r][j];
      if (neg_col[j] != kNone) a[r][neg_col[j]] = -sign * problem.a[r][j];
    }
  }

  LpSolution sol;
  Tableau tab(std::move(a), std::move(b), cols);
  tab.set_phase1_costs();
  tab.run(true, sol.iterations);
  if (tab.value() > tolerance::kFeasibility) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  tab.expel_artificials();
  tab.set_phase2_costs(c);
  if (tab.run(false, sol.iterations) == Tableau::Outcome::unbounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  const std::vector<double> split = tab.primal();
  sol.z.assign(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    sol.z[j] = split[pos_col[j]];
    if (neg_col[j] != kNone) sol.z[j] -= split[neg_col[j]];
  }
  sol.status = LpStatus::optimal;
  sol.objective_value = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    sol.objective_value += problem.objective[j] * sol.z[j];
  }

  // Guard against silent numerical breakdown.
  double zmax = 0.0;
  for (double v : sol.z) zmax = std::max(zmax, std::abs(v));
  for (std::size_t r = 0; r < m; ++r) {
    double lhs = 0.0, amax = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      lhs += problem.a[r][j] * sol.z[j];
      amax = std::max(amax, std::abs(problem.a[r][j]));
    }
    const double scale = 1.0 + std::abs(problem.rhs[r]) + amax * zmax;
    if (std::abs(lhs - problem.rhs[r]) > 1e-7 * scale) {
      throw InvariantViolation("simplex returned a point violating row " +
                               std::to_string(r));
    }
  }
  return sol;
}

std::size_t LpBuilder::add_variable(double cost, bool is_free) {
  costs_.push_back(cost);
  free_.push_back(is_free);
  return costs_.size() - 1;
}

void LpBuilder::add_row(std::vector<std::pair<std::size_t, double>> terms,
                        Sense sense, double rhs) {
  for (const auto& term : terms) {
    if (term.first >= costs_.size()) {
      throw InvalidArgument("LP row references unknown variable");
    }
  }
  rows_.push_back(Row{std::move(terms), sense, rhs});
}

LpProblem LpBuilder::build() const {
  std::size_t slacks = 0;
  for (const auto& r : rows_) slacks += r.sense != Sense::eq;
  const std::size_t k = costs_.size() + slacks;

  LpProblem p;
  p.objective = costs_;
  p.objective.resize(k, 0.0);
  p.free = free_;
  p.free.resize(k, false);
  p.a.assign(rows_.size(), std::vector<double>(k, 0.0));
  p.rhs.resize(rows_.size());

  std::size_t slack = costs_.size();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& row = rows_[i];
    for (const auto& [j, v] : row.terms) p.a[i][j] += v;
    if (row.sense == Sense::le) p.a[i][slack++] = 1.0;
    if (row.sense == Sense::ge) p.a[i][slack++] = -1.0;
    p.rhs[i] = row.rhs;
  }
  return p;
}

}  // namespace conegauge
