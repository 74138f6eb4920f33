#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "conegauge/numeric.hpp"

namespace conegauge {

/// K = {x : a_i . x >= 0 for all i}. Normals are stored with unit length.
class HalfspaceCone {
 public:
  explicit HalfspaceCone(std::vector<Vector> normals);

  std::size_t dim() const noexcept { return normals_.front().size(); }
  const std::vector<Vector>& normals() const noexcept { return normals_; }
  /// True once redundant normals have been removed by eliminate_redundancy.
  bool irredundant() const noexcept { return irredundant_; }

 private:
  friend HalfspaceCone eliminate_redundancy(const HalfspaceCone& cone);

  std::vector<Vector> normals_;
  bool irredundant_ = false;
};

/// K = {sum_j l_j g_j : l_j >= 0}. Generators are stored with unit length.
class GeneratorCone {
 public:
  explicit GeneratorCone(std::vector<Vector> generators);

  std::size_t dim() const noexcept { return generators_.front().size(); }
  const std::vector<Vector>& generators() const noexcept { return generators_; }

 private:
  std::vector<Vector> generators_;
};

using Cone = std::variant<HalfspaceCone, GeneratorCone>;

std::size_t dim(const Cone& cone);

/// Distance-like membership residual: zero inside K. H-rep uses
/// max(0, -min_i a_i.x); V-rep uses the least sup-norm residual of
/// x - sum l_j g_j over l >= 0.
double membership_violation(const HalfspaceCone& cone, const Vector& x);
double membership_violation(const GeneratorCone& cone, const Vector& x);
double membership_violation(const Cone& cone, const Vector& x);

bool contains(const HalfspaceCone& cone, const Vector& x,
              double tol = tolerance::kFeasibility);
bool contains(const GeneratorCone& cone, const Vector& x,
              double tol = tolerance::kFeasibility);
bool contains(const Cone& cone, const Vector& x,
              double tol = tolerance::kFeasibility);

/// K ∩ (-K) = {0}.
bool is_pointed(const HalfspaceCone& cone);
bool is_pointed(const GeneratorCone& cone);
bool is_pointed(const Cone& cone);

/// A point of int K. Throws NotFullDimensional when the interior is empty.
Vector interior_point(const HalfspaceCone& cone);
Vector interior_point(const GeneratorCone& cone);
Vector interior_point(const Cone& cone);

/// min_i a_i . x, the Euclidean distance from x to the nearest facet
/// hyperplane when x is inside the cone.
double facet_margin(const HalfspaceCone& cone, const Vector& x);

/// Lower bound on the Euclidean distance from x to the boundary of K:
/// H-rep returns facet_margin; V-rep returns r / sqrt(n) where r <= 1 is the
/// largest step along every ±e_j that stays inside K.
double interior_margin(const Cone& cone, const Vector& x);

bool is_proper_cone(const HalfspaceCone& cone);
bool is_proper_cone(const GeneratorCone& cone);
bool is_proper_cone(const Cone& cone);

/// Requires an irredundant cone and x in K (within tol).
bool on_boundary(const HalfspaceCone& cone, const Vector& x,
                 double tol = tolerance::kFeasibility);

/// Index of the most active facet (smallest a_i . x, first on ties) when it is
/// active within tol.
std::optional<std::size_t> active_facet(const HalfspaceCone& cone,
                                        const Vector& x,
                                        double tol = tolerance::kFeasibility);

/// Outcome of testing x <=_K y.
struct ConeOrderWitness {
  Vector x;
  Vector y;
  Vector difference;  // y - x
  bool member = false;
};

ConeOrderWitness order_witness(const Vector& x, const Vector& y,
                               const Cone& cone,
                               double tol = tolerance::kFeasibility);

/// x <=_K y  iff  y - x in K.
bool leq_cone(const Vector& x, const Vector& y, const Cone& cone,
              double tol = tolerance::kFeasibility);

/// Drops exact duplicates (first occurrence wins) and every normal implied by
/// the remaining ones.
HalfspaceCone eliminate_redundancy(const HalfspaceCone& cone);

}  // namespace conegauge
