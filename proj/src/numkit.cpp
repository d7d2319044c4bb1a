#include "meridian/numkit.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace meridian {

void TolerancePolicy::validate() const {
  auto positive = [](double x) { return x > 0.0 && std::isfinite(x); };
  if (!positive(fd_step) || richardson_levels < 1 || !positive(residual_tol_numeric) ||
      !positive(residual_tol_analytic) || !positive(frame_parallel_threshold) ||
      !positive(f_min))
    throw ConfigError("tolerance policy: all fields must be strictly positive");
  if (residual_tol_analytic > residual_tol_numeric)
    throw ConfigError("tolerance policy: residual_tol_analytic must not exceed residual_tol_numeric");
  if (richardson_levels > 8)
    throw ConfigError("tolerance policy: richardson_levels > 8 is below roundoff floor");
}

namespace {

Vec4 eval_checked(const ImmersionFn& func, double u, double v) {
  Vec4 r;
  try {
    r = func(u, v);
  } catch (const Error& e) {
    std::ostringstream os;
    os << "stencil point (" << u << ", " << v << ") rejected: " << e.what();
    throw StencilOutOfDomain(os.str());
  }
  if (!finite(r)) {
    std::ostringstream os;
    os << "stencil point (" << u << ", " << v << ") evaluated non-finite";
    throw StencilOutOfDomain(os.str());
  }
  return r;
}

}  // namespace

Jet2 richardson_partials(const ImmersionFn& func, double u, double v,
                         const TolerancePolicy& policy) {
  policy.validate();
  const int L = policy.richardson_levels;
  const double su = std::max(1.0, std::abs(u));
  const double sv = std::max(1.0, std::abs(v));
  const double h1u = policy.fd_step * su;
  const double h1v = policy.fd_step * sv;
  const double h2u = std::sqrt(policy.fd_step) * su;
  const double h2v = std::sqrt(policy.fd_step) * sv;

  auto extrapolate = [&](const std::function<Vec4(double)>& stencil, double h) {
    // Neville tableau, columns indexed by extrapolation order.
    std::vector<Vec4> diag;
    diag.reserve(L);
    for (int k = 0; k < L; ++k) {
      Vec4 t = stencil(h / double(1 << k));
      double f = 1.0;
      for (int j = 0; j < k; ++j) {
        f *= 4.0;
        Vec4 next = (t * f - diag[j]) * (1.0 / (f - 1.0));
        diag[j] = t;
        t = next;
      }
      diag.push_back(t);
    }
    return diag[L - 1];
  };

  Jet2 jet;
  jet.X = eval_checked(func, u, v);
  jet.Xu = extrapolate(
      [&](double h) { return (eval_checked(func, u + h, v) - eval_checked(func, u - h, v)) * (0.5 / h); },
      h1u);
  jet.Xv = extrapolate(
      [&](double h) { return (eval_checked(func, u, v + h) - eval_checked(func, u, v - h)) * (0.5 / h); },
      h1v);
  jet.Xuu = extrapolate(
      [&](double h) {
        return (eval_checked(func, u + h, v) - jet.X * 2.0 + eval_checked(func, u - h, v)) *
               (1.0 / (h * h));
      },
      h2u);
  jet.Xvv = extrapolate(
      [&](double h) {
        return (eval_checked(func, u, v + h) - jet.X * 2.0 + eval_checked(func, u, v - h)) *
               (1.0 / (h * h));
      },
      h2v);
  jet.Xuv = extrapolate(
      [&](double h) {
        const double hu = h, hv = h * sv / su;
        return (eval_checked(func, u + hu, v + hv) - eval_checked(func, u + hu, v - hv) -
                eval_checked(func, u - hu, v + hv) + eval_checked(func, u - hu, v - hv)) *
               (0.25 / (hu * hv));
      },
      h2u);
  return jet;
}

AdaptedFrame orthonormalize_frame(const Vec4& t1, const Vec4& t2,
                                  const TolerancePolicy& policy) {
  const double E = dot(t1, t1), F = dot(t1, t2), G = dot(t2, t2);
  const double W2 = E * G - F * F;
  if (!(W2 > policy.frame_parallel_threshold)) {
    std::ostringstream os;
    os << "tangent plane degenerate: EG-F^2 = " << W2;
    throw DegenerateTangentPlane(os.str());
  }

  AdaptedFrame fr;
  fr.X1 = normalized(t1);
  Vec4 r2 = t2 - fr.X1 * dot(t2, fr.X1);
  fr.X2 = normalized(r2);

  // Complete the basis from standard seeds taken in index order.
  std::array<Vec4, 2> normals{};
  int found = 0;
  for (int s = 0; s < 4 && found < 2; ++s) {
    Vec4 seed;
    seed[s] = 1.0;
    Vec4 rej = seed - fr.X1 * dot(seed, fr.X1) - fr.X2 * dot(seed, fr.X2);
    for (int k = 0; k < found; ++k) rej = rej - normals[k] * dot(rej, normals[k]);
    const double n = norm(rej);
    if (n > policy.frame_parallel_threshold) normals[found++] = rej * (1.0 / n);
  }
  if (found != 2) throw DegenerateTangentPlane("normal completion failed");
  fr.N1 = normals[0];
  fr.N2 = normals[1];
  return fr;
}

}  // namespace meridian
