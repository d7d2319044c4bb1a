#include "meridian/semiparallel.hpp"

#include <sstream>

namespace meridian {

SemiParallelTensor rbar_h_formula(const SecondFundamentalForm& sff, double K) {
  double h11[2], h12[2], h22[2];
  sff.hvec(0, 0, h11);
  sff.hvec(0, 1, h12);
  sff.hvec(1, 1, h22);
  const double diff[2] = {h11[0] - h22[0], h11[1] - h22[1]};

  double s11 = 0, s12 = 0, s22 = 0;  // sums over alpha
  double t11 = 0, t12 = 0, t22 = 0;
  for (int a = 0; a < 2; ++a) {
    const double c11 = sff.coeff(a, 0, 0), c12 = sff.coeff(a, 0, 1), c22 = sff.coeff(a, 1, 1);
    s11 += c11 * (c22 - c11);
    s12 += c12 * (c22 - c11);
    s22 += c22 * (c22 - c11);
    t11 += c11 * c12;
    t12 += c12 * c12;
    t22 += c22 * c12;
  }

  SemiParallelTensor out;
  for (int b = 0; b < 2; ++b) {
    out.S[0][b] = (s11 + 2 * K) * h12[b] + t11 * diff[b];
    out.S[1][b] = s12 * h12[b] + (t12 - K) * diff[b];
    out.S[2][b] = (s22 - 2 * K) * h12[b] + t22 * diff[b];
  }
  out.finish();
  return out;
}

SemiParallelTensor rbar_h_direct(const SecondFundamentalForm& sff, double K) {
  const NormalCurvatureOperator nc = normal_curvature_operator(sff);

  // Rperp acting on a normal vector given in (N1,N2) coordinates.
  auto rperp = [&](const double w[2], double out[2]) {
    for (int b = 0; b < 2; ++b)
      out[b] = w[0] * nc.expansion[0][b] + w[1] * nc.expansion[1][b];
  };
  // R(X1,X2)X_k in the tangent frame: X1 -> -K X2, X2 -> K X1.
  const double rx[2][2] = {{0, -K}, {K, 0}};  // rx[k] = coords of R(X1,X2)X_k

  auto hbil = [&](const double x[2], const double y[2], double out[2]) {
    for (int b = 0; b < 2; ++b) {
      double v = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v += x[i] * y[j] * sff.coeff(b, i, j);
      out[b] = v;
    }
  };

  const double basis[2][2] = {{1, 0}, {0, 1}};
  SemiParallelTensor out;
  const int pairs[3][2] = {{0, 0}, {0, 1}, {1, 1}};
  for (int p = 0; p < 3; ++p) {
    const int k = pairs[p][0], l = pairs[p][1];
    double hkl[2];
    sff.hvec(k, l, hkl);
    double term1[2], term2[2], term3[2];
    rperp(hkl, term1);
    hbil(rx[k], basis[l], term2);
    hbil(basis[k], rx[l], term3);
    for (int b = 0; b < 2; ++b) out.S[p][b] = term1[b] - term2[b] - term3[b];
  }
  out.finish();
  return out;
}

namespace {

constexpr double kRouteGuard = 1e-8;

double route_gap(const SemiParallelTensor& a, const SemiParallelTensor& b) {
  double gap = 0;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 2; ++q) gap = std::max(gap, std::abs(a.S[p][q] - b.S[p][q]));
  return gap;
}

}  // namespace

SemiParallelTensor semiparallel_tensor(const Surface& surface, double u, double v,
                                       const TolerancePolicy& policy) {
  const AdaptedFrame frame = surface.frame(u, v, policy);
  const SecondFundamentalForm sff = second_form(surface.jet(u, v, policy), frame);
  const double K = curvature_report(sff).K;
  const SemiParallelTensor formula = rbar_h_formula(sff, K);
  const SemiParallelTensor direct = rbar_h_direct(sff, K);
  const double gap = route_gap(formula, direct);
  if (gap > kRouteGuard) {
    std::ostringstream os;
    os << "semi-parallel routes disagree by " << gap << " at (" << u << ", " << v << ")";
    throw RouteDisagreement(os.str());
  }
  return formula;
}

Verdict semiparallel_verdict(const Surface& surface, double u, double v,
                             const TolerancePolicy& policy) {
  const SemiParallelTensor t = semiparallel_tensor(surface, u, v, policy);
  Verdict verdict;
  verdict.tol_used = surface.jet_kind() == JetKind::Analytic ? policy.residual_tol_analytic
                                                             : policy.residual_tol_numeric;
  verdict.residual_norm = t.residual_norm;
  verdict.semi_parallel = t.residual_norm < verdict.tol_used;
  return verdict;
}

}  // namespace meridian
