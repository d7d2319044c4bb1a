#include "meridian/invariants.hpp"

#include <algorithm>
#include <complex>
#include <sstream>
#include <vector>

namespace meridian {

FirstFundamentalForm first_form(const Jet2& jet, const TolerancePolicy& policy) {
  FirstFundamentalForm ff;
  ff.E = dot(jet.Xu, jet.Xu);
  ff.F = dot(jet.Xu, jet.Xv);
  ff.G = dot(jet.Xv, jet.Xv);
  ff.W2 = ff.E * ff.G - ff.F * ff.F;
  if (!(ff.W2 > policy.frame_parallel_threshold)) {
    std::ostringstream os;
    os << "first form degenerate: EG-F^2 = " << ff.W2;
    throw DegenerateTangentPlane(os.str());
  }
  return ff;
}

SecondFundamentalForm second_form(const Jet2& jet, const AdaptedFrame& frame) {
  // Coordinate-basis normal projections.
  double hc[2][3];
  const Vec4* dd[3] = {&jet.Xuu, &jet.Xuv, &jet.Xvv};
  const Vec4* nn[2] = {&frame.N1, &frame.N2};
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k < 3; ++k) hc[a][k] = dot(*dd[k], *nn[a]);

  // Coefficients of X1, X2 in (X_u, X_v): solve the metric system.
  const double E = dot(jet.Xu, jet.Xu), F = dot(jet.Xu, jet.Xv), G = dot(jet.Xv, jet.Xv);
  const double W2 = E * G - F * F;
  auto tangent_coeffs = [&](const Vec4& X, double& a, double& b) {
    const double p = dot(X, jet.Xu), q = dot(X, jet.Xv);
    a = (G * p - F * q) / W2;
    b = (E * q - F * p) / W2;
  };
  double a1, b1, a2, b2;
  tangent_coeffs(frame.X1, a1, b1);
  tangent_coeffs(frame.X2, a2, b2);

  SecondFundamentalForm sff;
  for (int a = 0; a < 2; ++a) {
    const double* h = hc[a];
    sff.h[a][0] = a1 * a1 * h[0] + 2 * a1 * b1 * h[1] + b1 * b1 * h[2];
    sff.h[a][1] = a1 * a2 * h[0] + (a1 * b2 + a2 * b1) * h[1] + b1 * b2 * h[2];
    sff.h[a][2] = a2 * a2 * h[0] + 2 * a2 * b2 * h[1] + b2 * b2 * h[2];
  }
  return sff;
}

ShapeOperatorPair shape_operators(const SecondFundamentalForm& sff) {
  // Metric is the identity in the orthonormal frame, so A_alpha = [h^alpha_ij].
  ShapeOperatorPair ops;
  ops.A1 = {{{sff.h[0][0], sff.h[0][1]}, {sff.h[0][1], sff.h[0][2]}}};
  ops.A2 = {{{sff.h[1][0], sff.h[1][1]}, {sff.h[1][1], sff.h[1][2]}}};
  return ops;
}

double gauss_curvature_shape_route(const ShapeOperatorPair& ops) {
  // <R(X1,X2)X2, X1> with R from the wedge sum over shape operators.
  const Mat2* as[2] = {&ops.A1, &ops.A2};
  double k = 0;
  for (const Mat2* a : as) {
    // p = A X1, q = A X2 in the orthonormal tangent basis.
    const double p[2] = {a->m[0][0], a->m[1][0]};
    const double q[2] = {a->m[0][1], a->m[1][1]};
    // (p ^ q) X2 = <q,X2> p - <p,X2> q; contract with X1.
    k += q[1] * p[0] - p[1] * q[0];
  }
  return k;
}

namespace {

// Roots of a complex polynomial (highest degree first) by Durand-Kerner.
std::vector<std::complex<double>> poly_roots(std::vector<std::complex<double>> c) {
  using C = std::complex<double>;
  double scale = 0;
  for (const C& x : c) scale = std::max(scale, std::abs(x));
  if (scale == 0) return {};
  // Strip negligible leading coefficients.
  size_t lead = 0;
  while (lead + 1 < c.size() && std::abs(c[lead]) < 1e-14 * scale) ++lead;
  c.erase(c.begin(), c.begin() + long(lead));
  const size_t n = c.size() - 1;
  if (n == 0) return {};
  const C top = c[0];
  for (C& x : c) x /= top;

  std::vector<C> r(n);
  C seed(0.4, 0.9);
  C p(1, 0);
  for (size_t i = 0; i < n; ++i) {
    p *= seed;
    r[i] = p;
  }
  for (int it = 0; it < 500; ++it) {
    double moved = 0;
    for (size_t i = 0; i < n; ++i) {
      C num = 0;
      for (const C& x : c) num = num * r[i] + x;
      C den = 1;
      for (size_t j = 0; j < n; ++j)
        if (j != i) den *= r[i] - r[j];
      const C delta = num / den;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return r;
}

}  // namespace

CurvatureReport curvature_report(const SecondFundamentalForm& sff) {
  CurvatureReport rep;
  double h11[2], h12[2], h22[2];
  sff.hvec(0, 0, h11);
  sff.hvec(0, 1, h12);
  sff.hvec(1, 1, h22);

  rep.K = h11[0] * h22[0] + h11[1] * h22[1] - (h12[0] * h12[0] + h12[1] * h12[1]);

  const ShapeOperatorPair ops = shape_operators(sff);
  rep.K_N = std::abs(commutator(ops.A1, ops.A2).m[1][0]);

  rep.H[0] = 0.5 * (h11[0] + h22[0]);
  rep.H[1] = 0.5 * (h11[1] + h22[1]);
  rep.H_norm = std::hypot(rep.H[0], rep.H[1]);
  rep.hH2_minus_3K = rep.H_norm * rep.H_norm - 3.0 * rep.K;

  auto umb = [](const Mat2& a) {
    const double t = 0.5 * trace(a);
    Mat2 d = a;
    d.m[0][0] -= t;
    d.m[1][1] -= t;
    return frobenius(d);
  };
  rep.umbilicity_deviation = std::max(umb(ops.A1), umb(ops.A2));

  // |h(X_t, X_t)|^2 with X_t = cos(t) X1 + sin(t) X2 is, in phi = 2t,
  //   F(phi) = a0 + b cos(phi) + c sin(phi) + d cos(2phi) + e sin(2phi);
  // extremes come from the roots of 2 i z^2 F'(phi), z = e^{i phi}.
  double M[2], P[2], Q[2];
  for (int a = 0; a < 2; ++a) {
    M[a] = 0.5 * (h11[a] + h22[a]);
    P[a] = 0.5 * (h11[a] - h22[a]);
    Q[a] = h12[a];
  }
  const double a0 = M[0] * M[0] + M[1] * M[1] +
                    0.5 * (P[0] * P[0] + P[1] * P[1] + Q[0] * Q[0] + Q[1] * Q[1]);
  const double b = 2 * (M[0] * P[0] + M[1] * P[1]);
  const double c = 2 * (M[0] * Q[0] + M[1] * Q[1]);
  const double d = 0.5 * (P[0] * P[0] + P[1] * P[1] - Q[0] * Q[0] - Q[1] * Q[1]);
  const double e = P[0] * Q[0] + P[1] * Q[1];

  auto F = [&](double phi) {
    return a0 + b * std::cos(phi) + c * std::sin(phi) + d * std::cos(2 * phi) +
           e * std::sin(2 * phi);
  };

  if (std::max({std::abs(b), std::abs(c), std::abs(d), std::abs(e)}) < 1e-15 * (1.0 + a0)) {
    rep.isotropy_deviation = 0;
  } else {
    using C = std::complex<double>;
    std::vector<C> poly = {C(-2 * d, 2 * e), C(-b, c), C(0, 0), C(b, c), C(2 * d, 2 * e)};
    double lo = F(0), hi = F(0);
    bool any = false;
    for (const C& z : poly_roots(poly)) {
      if (std::abs(std::abs(z) - 1.0) > 1e-6) continue;
      const double val = F(std::arg(z));
      lo = any ? std::min(lo, val) : val;
      hi = any ? std::max(hi, val) : val;
      any = true;
    }
    if (!any) {
      // Degenerate coefficient pattern; endpoints of the two pure harmonics.
      for (double phi : {0.0, 0.5 * M_PI, M_PI, 1.5 * M_PI}) {
        lo = std::min(lo, F(phi));
        hi = std::max(hi, F(phi));
      }
    }
    rep.isotropy_deviation =
        std::sqrt(std::max(hi, 0.0)) - std::sqrt(std::max(lo, 0.0));
  }
  return rep;
}

NormalCurvatureOperator normal_curvature_operator(const SecondFundamentalForm& sff) {
  NormalCurvatureOperator op;
  double h11[2], h12[2], h22[2];
  sff.hvec(0, 0, h11);
  sff.hvec(0, 1, h12);
  sff.hvec(1, 1, h22);
  const double diff[2] = {h11[0] - h22[0], h11[1] - h22[1]};
  for (int a = 0; a < 2; ++a) {
    const double c12 = sff.coeff(a, 0, 1);
    const double cdd = sff.coeff(a, 1, 1) - sff.coeff(a, 0, 0);
    for (int bta = 0; bta < 2; ++bta)
      op.expansion[a][bta] = c12 * diff[bta] + cdd * h12[bta];
  }
  const ShapeOperatorPair ops = shape_operators(sff);
  const Mat2* as[2] = {&ops.A1, &ops.A2};
  for (int a = 0; a < 2; ++a)
    for (int bta = 0; bta < 2; ++bta)
      op.commutator[a][bta] = commutator(*as[a], *as[bta]).m[1][0];
  double mis = 0;
  for (int a = 0; a < 2; ++a)
    for (int bta = 0; bta < 2; ++bta)
      mis = std::max(mis, std::abs(op.expansion[a][bta] - op.commutator[a][bta]));
  op.route_mismatch = mis;
  return op;
}

SecondFundamentalForm rotate_normal_gauge(const SecondFundamentalForm& sff, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  SecondFundamentalForm out;
  for (int k = 0; k < 3; ++k) {
    out.h[0][k] = c * sff.h[0][k] + s * sff.h[1][k];
    out.h[1][k] = -s * sff.h[0][k] + c * sff.h[1][k];
  }
  return out;
}

namespace {

// Frame and second-form coefficients as a smooth field over the chart;
// flattened for componentwise finite differencing.
struct FieldSample {
  AdaptedFrame frame;
  SecondFundamentalForm sff;

  std::vector<double> flatten() const {
    std::vector<double> v;
    v.reserve(22);
    for (const Vec4* w : {&frame.X1, &frame.X2, &frame.N1, &frame.N2})
      for (int i = 0; i < 4; ++i) v.push_back((*w)[i]);
    for (int a = 0; a < 2; ++a)
      for (int k = 0; k < 3; ++k) v.push_back(sff.h[a][k]);
    return v;
  }
};

FieldSample sample_field(const Surface& surface, double u, double v,
                         const TolerancePolicy& policy, const AdaptedFrame* anchor) {
  FieldSample fs;
  fs.frame = surface.frame(u, v, policy);
  if (anchor && !surface.is_meridian()) {
    // Seed-based Gram-Schmidt normals can switch seeds or flip orientation
    // between stencil points, which would corrupt the finite differences.
    // Rebuild the normals by projecting the anchor's normals onto the normal
    // space at this point: smooth in (u, v) as long as the tangent plane does
    // not rotate past the anchor normals.
    auto project_out = [&](Vec4 w, const Vec4& dir) { return w - dir * dot(w, dir); };
    Vec4 n1 = project_out(project_out(anchor->N1, fs.frame.X1), fs.frame.X2);
    Vec4 n2 = project_out(project_out(anchor->N2, fs.frame.X1), fs.frame.X2);
    const double len1 = norm(n1);
    if (len1 < 0.5) {
      std::ostringstream os;
      os << "tangent plane rotated past the anchor normals near (" << u << ", " << v << ")";
      throw GaugeDiscontinuity(os.str());
    }
    n1 = n1 * (1.0 / len1);
    n2 = project_out(n2, n1);
    const double len2 = norm(n2);
    if (len2 < 0.5) {
      std::ostringstream os;
      os << "tangent plane rotated past the anchor normals near (" << u << ", " << v << ")";
      throw GaugeDiscontinuity(os.str());
    }
    fs.frame.N1 = n1;
    fs.frame.N2 = n2 * (1.0 / len2);
  }
  fs.sff = second_form(surface.jet(u, v, policy), fs.frame);
  return fs;
}

std::vector<double> central_fd(const std::function<std::vector<double>(double)>& f,
                               double h, int levels) {
  std::vector<std::vector<double>> diag;
  for (int k = 0; k < levels; ++k) {
    const double hk = h / double(1 << k);
    std::vector<double> plus = f(hk), minus = f(-hk);
    std::vector<double> t(plus.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = (plus[i] - minus[i]) / (2 * hk);
    double fac = 1.0;
    for (int j = 0; j < k; ++j) {
      fac *= 4.0;
      std::vector<double> next(t.size());
      for (size_t i = 0; i < t.size(); ++i)
        next[i] = (t[i] * fac - diag[j][i]) / (fac - 1.0);
      diag[j] = t;
      t = next;
    }
    diag.push_back(t);
  }
  return diag[size_t(levels) - 1];
}

}  // namespace

StructuralResiduals structural_residuals(const Surface& surface, double u, double v,
                                         const TolerancePolicy& policy) {
  StructuralResiduals res;

  const FieldSample center = sample_field(surface, u, v, policy, nullptr);
  const CurvatureReport rep = curvature_report(center.sff);
  const ShapeOperatorPair ops = shape_operators(center.sff);

  res.gauss = std::abs(gauss_curvature_shape_route(ops) - rep.K);
  res.ricci = normal_curvature_operator(center.sff).route_mismatch;

  // Codazzi needs first derivatives of the frame and h fields.
  const double hu = policy.fd_step * std::max(1.0, std::abs(u));
  const double hv = policy.fd_step * std::max(1.0, std::abs(v));
  const std::vector<double> du = central_fd(
      [&](double s) { return sample_field(surface, u + s, v, policy, &center.frame).flatten(); },
      hu, policy.richardson_levels);
  const std::vector<double> dv = central_fd(
      [&](double s) { return sample_field(surface, u, v + s, policy, &center.frame).flatten(); },
      hv, policy.richardson_levels);

  auto vec4_at = [](const std::vector<double>& flat, int slot) {
    return Vec4{flat[slot * 4 + 0], flat[slot * 4 + 1], flat[slot * 4 + 2], flat[slot * 4 + 3]};
  };
  // Directional coefficients of X1, X2 in (d/du, d/dv).
  const Jet2 jet0 = surface.jet(u, v, policy);
  const double E = dot(jet0.Xu, jet0.Xu), F = dot(jet0.Xu, jet0.Xv), G = dot(jet0.Xv, jet0.Xv);
  const double W2 = E * G - F * F;
  auto coeffs = [&](const Vec4& X, double& a, double& b) {
    const double p = dot(X, jet0.Xu), q = dot(X, jet0.Xv);
    a = (G * p - F * q) / W2;
    b = (E * q - F * p) / W2;
  };
  double a[2], b[2];
  coeffs(center.frame.X1, a[0], b[0]);
  coeffs(center.frame.X2, a[1], b[1]);

  const Vec4 tang[2] = {center.frame.X1, center.frame.X2};
  const Vec4 norm[2] = {center.frame.N1, center.frame.N2};

  // Ambient derivative of frame field j along X_i, projected onto the frame.
  auto dframe = [&](int i, int slot) {
    return vec4_at(du, slot) * a[i] + vec4_at(dv, slot) * b[i];
  };
  double gamma[2][2][2];  // gamma[i][j][k] = <nabla_{X_i} X_j, X_k>
  double dn[2][2][2];     // dn[i][alpha][beta] = <D_{X_i} N_alpha, N_beta>
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Vec4 d = dframe(i, j);
      for (int k = 0; k < 2; ++k) gamma[i][j][k] = dot(d, tang[k]);
    }
    for (int al = 0; al < 2; ++al) {
      const Vec4 d = dframe(i, 2 + al);
      for (int bt = 0; bt < 2; ++bt) dn[i][al][bt] = dot(d, norm[bt]);
    }
  }
  auto dh = [&](int i, int alpha, int j, int k) {
    const int slot = j + k;
    return du[16 + alpha * 3 + slot] * a[i] + dv[16 + alpha * 3 + slot] * b[i];
  };

  // (nabla-bar_{X_i} h)(X_j, X_k) on N_beta, per the covariant derivative of h
  // on the tangent-plus-normal bundle.
  auto nabla_h = [&](int i, int j, int k, int beta) {
    double val = dh(i, beta, j, k);
    for (int al = 0; al < 2; ++al) val += center.sff.coeff(al, j, k) * dn[i][al][beta];
    for (int m = 0; m < 2; ++m) {
      val -= gamma[i][j][m] * center.sff.coeff(beta, m, k);
      val -= gamma[i][k][m] * center.sff.coeff(beta, j, m);
    }
    return val;
  };

  auto norm2diff = [&](int j1, int k1, int j2, int k2) {
    double s = 0;
    for (int beta = 0; beta < 2; ++beta) {
      const double d = nabla_h(0, j1, k1, beta) - nabla_h(1, j2, k2, beta);
      s += d * d;
    }
    return std::sqrt(s);
  };
  res.codazzi = norm2diff(1, 1, 0, 1) + norm2diff(1, 0, 0, 0);
  return res;
}

}  // namespace meridian
