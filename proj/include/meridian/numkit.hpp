#ifndef MERIDIAN_NUMKIT_HPP
#define MERIDIAN_NUMKIT_HPP

#include <cmath>
#include <functional>

#include "meridian/errors.hpp"

namespace meridian {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) { return v * (1.0 / norm(v)); }

struct Vec4 {
  double x = 0, y = 0, z = 0, w = 0;

  Vec4() = default;
  Vec4(double x_, double y_, double z_, double w_) : x(x_), y(y_), z(z_), w(w_) {}
  // Embed E^3 = span{e1,e2,e3} into E^4.
  explicit Vec4(const Vec3& v) : x(v.x), y(v.y), z(v.z), w(0) {}

  Vec4 operator+(const Vec4& o) const { return {x + o.x, y + o.y, z + o.z, w + o.w}; }
  Vec4 operator-(const Vec4& o) const { return {x - o.x, y - o.y, z - o.z, w - o.w}; }
  Vec4 operator*(double s) const { return {x * s, y * s, z * s, w * s}; }
  Vec4 operator-() const { return {-x, -y, -z, -w}; }

  double operator[](int i) const { return i == 0 ? x : i == 1 ? y : i == 2 ? z : w; }
  double& operator[](int i) { return i == 0 ? x : i == 1 ? y : i == 2 ? z : w; }
};

inline Vec4 operator*(double s, const Vec4& v) { return v * s; }
inline double dot(const Vec4& a, const Vec4& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z + a.w * b.w;
}
inline double norm(const Vec4& v) { return std::sqrt(dot(v, v)); }
inline Vec4 normalized(const Vec4& v) { return v * (1.0 / norm(v)); }

inline bool finite(const Vec4& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z) && std::isfinite(v.w);
}

struct Mat2 {
  double m[2][2] = {{0, 0}, {0, 0}};

  static Mat2 identity() { return {{{1, 0}, {0, 1}}}; }

  Mat2 operator+(const Mat2& o) const {
    return {{{m[0][0] + o.m[0][0], m[0][1] + o.m[0][1]},
             {m[1][0] + o.m[1][0], m[1][1] + o.m[1][1]}}};
  }
  Mat2 operator-(const Mat2& o) const {
    return {{{m[0][0] - o.m[0][0], m[0][1] - o.m[0][1]},
             {m[1][0] - o.m[1][0], m[1][1] - o.m[1][1]}}};
  }
  Mat2 operator*(double s) const {
    return {{{m[0][0] * s, m[0][1] * s}, {m[1][0] * s, m[1][1] * s}}};
  }
  Mat2 operator*(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
  }
};

inline double det(const Mat2& a) { return a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0]; }
inline double trace(const Mat2& a) { return a.m[0][0] + a.m[1][1]; }
inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }
inline double frobenius(const Mat2& a) {
  return std::sqrt(a.m[0][0] * a.m[0][0] + a.m[0][1] * a.m[0][1] + a.m[1][0] * a.m[1][0] +
                   a.m[1][1] * a.m[1][1]);
}

struct TolerancePolicy {
  double fd_step = 1e-5;               // base step for first differences
  int richardson_levels = 2;           // extrapolation depth, >= 1
  double residual_tol_numeric = 1e-6;  // structural residual gate, numeric jets
  double residual_tol_analytic = 1e-9; // structural residual gate, analytic jets
  double frame_parallel_threshold = 1e-9;
  double f_min = 1e-6;                 // pole guard for meridian profiles

  void validate() const;
};

// Position plus first and second partials of an immersion at (u,v).
struct Jet2 {
  Vec4 X, Xu, Xv, Xuu, Xuv, Xvv;
};

// Orthonormal tangent pair (X1,X2) and normal pair (N1,N2) at a point of E^4.
struct AdaptedFrame {
  Vec4 X1, X2, N1, N2;
};

using ImmersionFn = std::function<Vec4(double, double)>;

// Central differences with Richardson extrapolation of the configured depth.
// First partials use the base step, second partials use sqrt(fd_step) so the
// squared-step roundoff stays below the truncation floor; both are scaled by
// max(1,|coordinate|).
Jet2 richardson_partials(const ImmersionFn& func, double u, double v,
                         const TolerancePolicy& policy);

// Gram-Schmidt on (t1,t2) followed by a deterministic sweep of the standard
// basis seeds for the normal pair.
AdaptedFrame orthonormalize_frame(const Vec4& t1, const Vec4& t2,
                                  const TolerancePolicy& policy);

}  // namespace meridian

#endif
