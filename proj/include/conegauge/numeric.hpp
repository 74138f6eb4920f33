#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "conegauge/errors.hpp"

namespace conegauge {

/// Library-wide default tolerances.
namespace tolerance {
/// Absolute tolerance on constraint and membership residuals.
inline constexpr double kFeasibility = 1e-9;
/// Relative tolerance for comparing functional values.
inline constexpr double kRelative = 1e-8;
/// Minimum distance of -u from the cone boundary accepted for a gauge apex.
inline constexpr double kApexMargin = 1e-6;
/// Bracket width at which the bisection gauge oracle stops.
inline constexpr double kBisection = 1e-10;
}  // namespace tolerance

/// A point of R^n. All coordinates are finite.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords);

  static Vector zeros(std::size_t n);
  static Vector ones(std::size_t n);
  /// i-th standard basis vector of R^n.
  static Vector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& data() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double t);

  bool operator==(const Vector&) const = default;

 private:
  struct Unchecked {};
  Vector(Unchecked, std::vector<double> coords) : coords_(std::move(coords)) {}
  friend Vector operator-(const Vector& x);

  std::vector<double> coords_;
};

Vector operator+(Vector x, const Vector& y);
Vector operator-(Vector x, const Vector& y);
Vector operator-(const Vector& x);
Vector operator*(double t, Vector x);
Vector operator*(Vector x, double t);

void require_same_dim(const Vector& x, const Vector& y);
void require_dim(const Vector& x, std::size_t n);

double dot(const Vector& x, const Vector& y);
double norm2(const Vector& x);
double norm_inf(const Vector& x);
/// x / ||x||_2; throws InvalidArgument for the zero vector.
Vector normalized(const Vector& x);

/// Numerical rank of the matrix whose rows are `rows`, by Gaussian
/// elimination with partial pivoting. Pivots below rel_tol * max|entry| count
/// as zero.
std::size_t rank(std::span<const Vector> rows, double rel_tol = 1e-10);

// ---------------------------------------------------------------------------
// Linear programming

enum class LpStatus { optimal, infeasible, unbounded };

/// minimize c.z  subject to  A z = b, z_j >= 0 unless free[j].
struct LpProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> a;  // m rows of length k
  std::vector<double> rhs;
  std::vector<bool> free;  // empty means every variable is nonnegative

  std::size_t num_vars() const noexcept { return objective.size(); }
  std::size_t num_rows() const noexcept { return a.size(); }
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> z;
  double objective_value = 0.0;
  std::size_t iterations = 0;
};

inline constexpr std::size_t kLpMaxVars = 64;
inline constexpr std::size_t kLpMaxRows = 128;
inline constexpr std::size_t kLpIterationCap = 10000;

/// Dense two-phase simplex with Bland's rule. Deterministic. Throws LpStalled
/// when the iteration cap is hit.
LpSolution lp_solve(const LpProblem& problem);

/// Assembles an LpProblem from inequality rows, adding slack variables.
class LpBuilder {
 public:
  enum class Sense { le, eq, ge };

  /// Adds a variable with the given objective coefficient; returns its index.
  std::size_t add_variable(double cost, bool is_free = false);
  void add_row(std::vector<std::pair<std::size_t, double>> terms, Sense sense,
               double rhs);
  std::size_t num_vars() const noexcept { return costs_.size(); }

  LpProblem build() const;

 private:
  struct Row {
    std::vector<std::pair<std::size_t, double>> terms;
    Sense sense;
    double rhs;
  };
  std::vector<double> costs_;
  std::vector<bool> free_;
  std::vector<Row> rows_;
};

}  // namespace conegauge
