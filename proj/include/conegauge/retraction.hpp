#pragma once

#include <functional>
#include <optional>

#include "conegauge/cone.hpp"
#include "conegauge/gauge.hpp"

namespace conegauge {

/// The mutually polar retractions R x = q(x) u (onto the ray N = {t u}) and
/// Q = I - R (onto the cone M = {q = 0}) induced by a gauge.
class RetractionPair {
 public:
  explicit RetractionPair(GaugeNorm gauge) : gauge_(std::move(gauge)) {}

  const GaugeNorm& gauge() const noexcept { return gauge_; }
  const Vector& ray_direction() const noexcept { return gauge_.apex(); }
  const Cone& range_cone() const noexcept { return gauge_.cone(); }
  std::size_t dim() const noexcept { return gauge_.dim(); }

 private:
  GaugeNorm gauge_;
};

/// Builds the pair for a proper cone M and an interior point -u of M.
/// Throws ConeNotProper or ApexNotInterior.
RetractionPair build_pair(Cone cone, const Vector& minus_u);

Vector apply_R(const RetractionPair& pair, const Vector& x);
Vector apply_Q(const RetractionPair& pair, const Vector& x);

/// A pair of maps audited as retractions: Q onto `range_cone`, R onto the
/// ray spanned by `ray`. Pairs not built from a gauge use this form directly.
struct RetractionOps {
  std::size_t dim = 0;
  std::function<Vector(const Vector&)> Q;
  std::function<Vector(const Vector&)> R;
  Cone range_cone;
  Vector ray;
  /// Lipschitz constant of x -> (Rx . u) / (u . u), when known.
  std::optional<double> lipschitz;
  std::vector<Vector> extra_stencil;
};

RetractionOps as_ops(const RetractionPair& pair);

/// Check names, in report order.
inline constexpr const char* kAuditChecks[] = {
    "idempotence_Q", "idempotence_R",   "polarity_QR",     "polarity_RQ",
    "range_Q",       "range_R",         "boundary_Q",      "homogeneity",
    "subadditivity_Q", "subadditivity_R", "continuity"};

/// Points with (Rx . u) / (u . u) at or below this are not treated as lying
/// outside M by the boundary check.
inline constexpr double kOutsideRangeThreshold = 1e-3;

CheckReport audit_retraction(const RetractionOps& ops, const CheckOptions& options);
CheckReport audit_retraction(const RetractionPair& pair, const CheckOptions& options);

/// Distance from v to the ray {t u : t >= 0}.
double ray_distance(const Vector& v, const Vector& u);

struct SubadditivityCertificate {
  /// Q(x+y) <=_M Qx + Qy; `difference` is Qx + Qy - Q(x+y).
  ConeOrderWitness order;
  /// s = q(x) + q(y) - q(x+y), nonnegative up to rounding.
  double slack = 0.0;
  /// |difference - s (-u)|, zero up to rounding.
  double identity_residual = 0.0;
};

SubadditivityCertificate subadditivity_certificate(
    const RetractionPair& pair, const Vector& x, const Vector& y,
    double tol = tolerance::kFeasibility);

/// q(x) = (Rx . u) / (u . u), provided the sampled images of R span at most
/// one dimension. Returns nullopt otherwise.
std::optional<Functional> recover_functional(const RetractionOps& ops,
                                             const CheckOptions& options);

}  // namespace conegauge
