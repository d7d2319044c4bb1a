#include "meridian/surface.hpp"

namespace meridian {

Surface Surface::meridian(const MeridianSpec& spec, double f_min) {
  Surface s;
  s.jet_kind_ = JetKind::Analytic;
  s.name_ = "meridian";
  s.payload_ = std::make_shared<const MeridianPayload>(
      MeridianPayload{make_spherical_curve(spec.curve), make_profile(spec.profile, f_min)});
  auto payload = s.payload_;
  s.fn_ = [payload](double u, double v) {
    const ProfileSample p = payload->profile(u);
    const SphericalCurveSample c = payload->curve(v);
    Vec4 x(c.r * p.f);
    x.w = p.g;
    return x;
  };
  return s;
}

Surface Surface::immersion(ImmersionFn fn, std::string name) {
  if (!fn) throw ConfigError("immersion surface requires an evaluator");
  Surface s;
  s.jet_kind_ = JetKind::Numeric;
  s.name_ = std::move(name);
  s.fn_ = std::move(fn);
  return s;
}

const MeridianPayload& Surface::payload() const {
  if (!payload_) throw NotAMeridian("surface '" + name_ + "' has no meridian payload");
  return *payload_;
}

Jet2 Surface::jet(double u, double v, const TolerancePolicy& policy) const {
  if (jet_kind_ == JetKind::Numeric) return numeric_jet(u, v, policy);
  // Chain rule through the Frenet system: X_v = f t, X_vv = f (kappa n - r).
  const ProfileSample p = payload_->profile(u);
  const SphericalCurveSample c = payload_->curve(v);
  Jet2 j;
  j.X = Vec4(c.r * p.f);
  j.X.w = p.g;
  j.Xu = Vec4(c.r * p.fp);
  j.Xu.w = p.gp;
  j.Xv = Vec4(c.t * p.f);
  j.Xuu = Vec4(c.r * p.fpp);
  j.Xuu.w = p.gpp;
  j.Xuv = Vec4(c.t * p.fp);
  j.Xvv = Vec4((c.n * c.kappa - c.r) * p.f);
  return j;
}

Jet2 Surface::numeric_jet(double u, double v, const TolerancePolicy& policy) const {
  return richardson_partials(fn_, u, v, policy);
}

AdaptedFrame Surface::frame(double u, double v, const TolerancePolicy& policy) const {
  if (payload_) {
    const ProfileSample p = payload_->profile(u);
    const SphericalCurveSample c = payload_->curve(v);
    AdaptedFrame fr;
    fr.X1 = Vec4(c.r * p.fp);
    fr.X1.w = p.gp;
    fr.X2 = Vec4(c.t);
    fr.N1 = Vec4(c.n);
    fr.N2 = Vec4(c.r * (-p.gp));
    fr.N2.w = p.fp;
    return fr;
  }
  const Jet2 j = jet(u, v, policy);
  return orthonormalize_frame(j.Xu, j.Xv, policy);
}

Surface make_meridian_surface(const MeridianSpec& spec, double f_min) {
  return Surface::meridian(spec, f_min);
}

}  // namespace meridian
