#ifndef MERIDIAN_SURFACE_HPP
#define MERIDIAN_SURFACE_HPP

#include <memory>
#include <string>

#include "meridian/curves.hpp"
#include "meridian/numkit.hpp"

namespace meridian {

enum class JetKind { Analytic, Numeric };

// Declarative description of a meridian surface X(u,v) = f(u) r(v) + g(u) e4.
struct MeridianSpec {
  CurveSpec curve;
  ProfileSpec profile;
};

struct MeridianPayload {
  SphericalCurve curve;
  Profile profile;
};

// Immutable immersed surface in E^4 exposed as a jet evaluator. Meridian
// surfaces carry analytic jets and the curve/profile payload; raw immersions
// fall back to numeric differentiation.
class Surface {
 public:
  // Default-constructed surfaces are empty placeholders; evaluate only
  // surfaces obtained from the factories below.
  Surface() = default;

  static Surface meridian(const MeridianSpec& spec, double f_min = 1e-6);
  static Surface immersion(ImmersionFn fn, std::string name = "immersion");

  JetKind jet_kind() const { return jet_kind_; }
  bool is_meridian() const { return payload_ != nullptr; }
  const MeridianPayload& payload() const;
  const std::string& name() const { return name_; }
  const ImmersionFn& immersion_fn() const { return fn_; }

  Jet2 jet(double u, double v, const TolerancePolicy& policy) const;
  // Numeric jet regardless of jet_kind; cross-check against analytic jets.
  Jet2 numeric_jet(double u, double v, const TolerancePolicy& policy) const;
  // Meridian surfaces return the closed-form frame X1 = X_u, X2 = X_v / f,
  // N1 = n(v), N2 = -g' r + f' e4; generic surfaces use Gram-Schmidt.
  AdaptedFrame frame(double u, double v, const TolerancePolicy& policy) const;

 private:
  JetKind jet_kind_ = JetKind::Numeric;
  std::string name_;
  ImmersionFn fn_;
  std::shared_ptr<const MeridianPayload> payload_;  // shared: surfaces are value types
};

Surface make_meridian_surface(const MeridianSpec& spec, double f_min = 1e-6);

}  // namespace meridian

#endif
