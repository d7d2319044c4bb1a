#ifndef MERIDIAN_CURVES_HPP
#define MERIDIAN_CURVES_HPP

#include <functional>
#include <memory>

#include "meridian/numkit.hpp"

namespace meridian {

// Point of an arc-length curve on S^2(1) with its spherical Frenet frame:
// r' = t, t' = kappa n - r, n' = -kappa t.
struct SphericalCurveSample {
  Vec3 r, t, n;
  double kappa = 0;
};

struct ProfileSample {
  double f = 0, g = 0;
  double fp = 0, gp = 0;    // f', g'
  double fpp = 0, gpp = 0;  // f'', g''
  double kappa_alpha = 0;   // signed curvature of u -> (f,g)
};

struct CurveSpec {
  enum class Kind { GreatCircle, Circle, Custom };
  Kind kind = Kind::GreatCircle;
  double kappa = 0;  // Circle: constant spherical curvature, != 0
  std::function<double(double)> kappa_fn;  // Custom
  // Custom initial frame at v = 0; must be orthonormal.
  Vec3 r0{1, 0, 0}, t0{0, 1, 0}, n0{0, 0, 1};

  static CurveSpec great_circle() { return {}; }
  static CurveSpec circle(double kappa);
  static CurveSpec custom(std::function<double(double)> kappa_fn);
};

struct ProfileSpec {
  enum class Kind { Line, SphereArc, PrintedSqrt, Custom };
  Kind kind = Kind::Line;
  double theta = 0, f0 = 0, g0 = 0;  // Line: f = u sin(theta)+f0, g = u cos(theta)+g0
  double k = 1, u0 = 0;              // SphereArc
  double a = 0, b = 1;               // PrintedSqrt, requires 2b > a^2
  std::function<ProfileSample(double)> custom_fn;

  static ProfileSpec line(double theta, double f0 = 0, double g0 = 0);
  static ProfileSpec sphere_arc(double k, double u0 = 0);
  static ProfileSpec printed_sqrt(double a, double b);
  static ProfileSpec custom(std::function<ProfileSample(double)> fn);
};

// Immutable arc-length evaluator for a spherical curve. Built-in kinds use
// closed forms; Custom integrates the Frenet system with fixed-step RK4 and
// re-orthonormalizes the frame after each step.
class SphericalCurve {
 public:
  explicit SphericalCurve(CurveSpec spec);
  SphericalCurveSample operator()(double v) const;
  const CurveSpec& spec() const { return spec_; }

 private:
  CurveSpec spec_;
};

// Immutable evaluator for an arc-length profile (f,g).
class Profile {
 public:
  Profile(ProfileSpec spec, double f_min);
  ProfileSample operator()(double u) const;
  const ProfileSpec& spec() const { return spec_; }
  double f_min() const { return f_min_; }

 private:
  ProfileSpec spec_;
  double f_min_;
};

SphericalCurve make_spherical_curve(const CurveSpec& spec);
Profile make_profile(const ProfileSpec& spec, double f_min = 1e-6);

// f'g'' - f''g'; equals -f''/sqrt(1-f'^2) on the g' > 0 branch.
double profile_kappa_alpha(const ProfileSample& s);

// max over uniform samples of |f'^2 + g'^2 - 1|.
double validate_arclength(const Profile& profile, double u_min, double u_max, int samples);

}  // namespace meridian

#endif
