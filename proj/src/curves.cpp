#include "meridian/curves.hpp"

#include <cmath>
#include <sstream>

namespace meridian {

CurveSpec CurveSpec::circle(double kappa) {
  if (kappa == 0.0 || !std::isfinite(kappa))
    throw ConfigError("circle curve requires nonzero finite kappa");
  CurveSpec s;
  s.kind = Kind::Circle;
  s.kappa = kappa;
  return s;
}

CurveSpec CurveSpec::custom(std::function<double(double)> kappa_fn) {
  if (!kappa_fn) throw ConfigError("custom curve requires a kappa function");
  CurveSpec s;
  s.kind = Kind::Custom;
  s.kappa_fn = std::move(kappa_fn);
  return s;
}

ProfileSpec ProfileSpec::line(double theta, double f0, double g0) {
  ProfileSpec s;
  s.kind = Kind::Line;
  s.theta = theta;
  s.f0 = f0;
  s.g0 = g0;
  return s;
}

ProfileSpec ProfileSpec::sphere_arc(double k, double u0) {
  if (!(k > 0)) throw ConfigError("sphere_arc profile requires k > 0");
  ProfileSpec s;
  s.kind = Kind::SphereArc;
  s.k = k;
  s.u0 = u0;
  return s;
}

ProfileSpec ProfileSpec::printed_sqrt(double a, double b) {
  if (!(2 * b > a * a)) throw ConfigError("printed_sqrt profile requires 2b > a^2");
  ProfileSpec s;
  s.kind = Kind::PrintedSqrt;
  s.a = a;
  s.b = b;
  return s;
}

ProfileSpec ProfileSpec::custom(std::function<ProfileSample(double)> fn) {
  if (!fn) throw ConfigError("custom profile requires an evaluator");
  ProfileSpec s;
  s.kind = Kind::Custom;
  s.custom_fn = std::move(fn);
  return s;
}

namespace {

struct FrenetState {
  Vec3 r, t, n;
};

FrenetState frenet_rhs(const FrenetState& s, double kappa) {
  return {s.t, s.n * kappa - s.r, s.t * (-kappa)};
}

FrenetState axpy(const FrenetState& s, const FrenetState& d, double h) {
  return {s.r + d.r * h, s.t + d.t * h, s.n + d.n * h};
}

double frame_drift(const FrenetState& s) {
  double d = std::abs(dot(s.r, s.r) - 1.0);
  d = std::max(d, std::abs(dot(s.t, s.t) - 1.0));
  d = std::max(d, std::abs(dot(s.n, s.n) - 1.0));
  d = std::max(d, std::abs(dot(s.r, s.t)));
  d = std::max(d, std::abs(dot(s.r, s.n)));
  d = std::max(d, std::abs(dot(s.t, s.n)));
  return d;
}

void reorthonormalize(FrenetState& s) {
  s.r = normalized(s.r);
  s.t = normalized(s.t - s.r * dot(s.t, s.r));
  s.n = normalized(s.n - s.r * dot(s.n, s.r) - s.t * dot(s.n, s.t));
}

constexpr double kFrenetStep = 1e-3;
constexpr double kDriftBudget = 1e-6;

SphericalCurveSample integrate_custom(const CurveSpec& spec, double v) {
  FrenetState s{spec.r0, spec.t0, spec.n0};
  const double dir = v >= 0 ? 1.0 : -1.0;
  const double len = std::abs(v);
  const long nsteps = std::max(1L, (long)std::ceil(len / kFrenetStep));
  const double h = dir * len / double(nsteps);
  double x = 0.0;
  if (len > 0) {
    for (long i = 0; i < nsteps; ++i) {
      const double k1v = spec.kappa_fn(x);
      const double kmidv = spec.kappa_fn(x + 0.5 * h);
      const double k4v = spec.kappa_fn(x + h);
      FrenetState d1 = frenet_rhs(s, k1v);
      FrenetState d2 = frenet_rhs(axpy(s, d1, 0.5 * h), kmidv);
      FrenetState d3 = frenet_rhs(axpy(s, d2, 0.5 * h), kmidv);
      FrenetState d4 = frenet_rhs(axpy(s, d3, h), k4v);
      s.r = s.r + (d1.r + d2.r * 2.0 + d3.r * 2.0 + d4.r) * (h / 6.0);
      s.t = s.t + (d1.t + d2.t * 2.0 + d3.t * 2.0 + d4.t) * (h / 6.0);
      s.n = s.n + (d1.n + d2.n * 2.0 + d3.n * 2.0 + d4.n) * (h / 6.0);
      if (frame_drift(s) > kDriftBudget) {
        std::ostringstream os;
        os << "Frenet frame drift exceeded " << kDriftBudget << " at v = " << x + h;
        throw IntegrationStepRejected(os.str());
      }
      reorthonormalize(s);
      x += h;
    }
  }
  return {s.r, s.t, s.n, spec.kappa_fn(v)};
}

}  // namespace

SphericalCurve::SphericalCurve(CurveSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind == CurveSpec::Kind::Circle && spec_.kappa == 0.0)
    throw ConfigError("circle curve requires nonzero kappa");
  if (spec_.kind == CurveSpec::Kind::Custom && !spec_.kappa_fn)
    throw ConfigError("custom curve requires a kappa function");
}

SphericalCurveSample SphericalCurve::operator()(double v) const {
  switch (spec_.kind) {
    case CurveSpec::Kind::GreatCircle: {
      const double c = std::cos(v), s = std::sin(v);
      return {{c, s, 0}, {-s, c, 0}, {0, 0, 1}, 0.0};
    }
    case CurveSpec::Kind::Circle: {
      // Euclidean radius c = 1/sqrt(1+kappa^2), height kappa*c; this is the
      // unique (up to rigid motion) arc-length solution of the Frenet system
      // with constant kappa.
      const double k = spec_.kappa;
      const double c = 1.0 / std::sqrt(1.0 + k * k);
      const double z0 = k * c;
      const double cs = std::cos(v / c), sn = std::sin(v / c);
      Vec3 r{c * cs, c * sn, z0};
      Vec3 t{-sn, cs, 0};
      Vec3 n{-k * c * cs, -k * c * sn, c};
      return {r, t, n, k};
    }
    case CurveSpec::Kind::Custom:
      return integrate_custom(spec_, v);
  }
  throw Error("unreachable curve kind");
}

Profile::Profile(ProfileSpec spec, double f_min) : spec_(std::move(spec)), f_min_(f_min) {
  if (!(f_min_ > 0)) throw ConfigError("profile pole guard f_min must be positive");
}

ProfileSample Profile::operator()(double u) const {
  ProfileSample s;
  switch (spec_.kind) {
    case ProfileSpec::Kind::Line: {
      const double sn = std::sin(spec_.theta), cs = std::cos(spec_.theta);
      s.f = u * sn + spec_.f0;
      s.g = u * cs + spec_.g0;
      s.fp = sn;
      s.gp = cs;
      s.fpp = s.gpp = 0;
      break;
    }
    case ProfileSpec::Kind::SphereArc: {
      const double k = spec_.k, w = k * (u - spec_.u0);
      s.f = std::sin(w) / k;
      s.g = -std::cos(w) / k;
      s.fp = std::cos(w);
      s.gp = std::sin(w);
      s.fpp = -k * std::sin(w);
      s.gpp = k * std::cos(w);
      break;
    }
    case ProfileSpec::Kind::PrintedSqrt: {
      const double a = spec_.a, b = spec_.b;
      const double rad = u * u - 2 * a * u + 2 * b;
      if (!(rad > 0)) {
        std::ostringstream os;
        os << "printed_sqrt radicand nonpositive at u = " << u;
        throw ProfileDomainError(os.str());
      }
      const double sr = std::sqrt(rad);
      const double c = std::sqrt(2 * b - a * a);
      s.f = sr;
      // The printed log argument u - a - sr is negative throughout the domain;
      // |.| drops a constant offset along e4 and leaves all derivatives intact.
      s.g = -c * std::log(std::abs(u - a - sr));
      s.fp = (u - a) / sr;
      s.gp = c / sr;
      s.fpp = (2 * b - a * a) / (rad * sr);
      s.gpp = -c * (u - a) / (rad * sr);
      break;
    }
    case ProfileSpec::Kind::Custom:
      s = spec_.custom_fn(u);
      break;
  }
  s.kappa_alpha = profile_kappa_alpha(s);
  if (!(s.f > f_min_)) {
    std::ostringstream os;
    os << "profile f = " << s.f << " at u = " << u << " hit pole guard f_min = " << f_min_;
    throw ProfileDomainError(os.str());
  }
  if (s.fp * s.fp > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "profile |f'| > 1 at u = " << u << " (arc-length violation)";
    throw ProfileDomainError(os.str());
  }
  return s;
}

SphericalCurve make_spherical_curve(const CurveSpec& spec) { return SphericalCurve(spec); }

Profile make_profile(const ProfileSpec& spec, double f_min) { return Profile(spec, f_min); }

double profile_kappa_alpha(const ProfileSample& s) { return s.fp * s.gpp - s.fpp * s.gp; }

double validate_arclength(const Profile& profile, double u_min, double u_max, int samples) {
  if (samples < 2) throw ConfigError("validate_arclength needs at least 2 samples");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double u = u_min + (u_max - u_min) * double(i) / double(samples - 1);
    const ProfileSample s = profile(u);
    worst = std::max(worst, std::abs(s.fp * s.fp + s.gp * s.gp - 1.0));
  }
  return worst;
}

}  // namespace meridian
