#include "meridian/classifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace meridian {

void GridSpec::validate() const {
  if (u_count < 2 || v_count < 2) throw ConfigError("grid needs at least 2 samples per axis");
  if (!(u_min < u_max) || !(v_min < v_max)) throw ConfigError("grid requires min < max");
}

static std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) out[size_t(i)] = lo + (hi - lo) * double(i) / double(n - 1);
  return out;
}

std::vector<double> GridSpec::u_samples() const { return linspace(u_min, u_max, u_count); }
std::vector<double> GridSpec::v_samples() const { return linspace(v_min, v_max, v_count); }

const char* to_string(MeridianCase c) {
  switch (c) {
    case MeridianCase::I: return "I";
    case MeridianCase::II: return "II";
    case MeridianCase::III: return "III";
    case MeridianCase::Degenerate: return "degenerate";
  }
  return "?";
}

const char* to_string(TheoremBranch b) {
  switch (b) {
    case TheoremBranch::CaseI: return "case_i";
    case TheoremBranch::CaseII: return "case_ii";
    case TheoremBranch::NotSemiParallel: return "not_semi_parallel";
    case TheoremBranch::Inconsistent: return "inconsistent";
  }
  return "?";
}

namespace {

constexpr double kZeroTol = 1e-9;
constexpr double kConstTol = 1e-8;

// Eigenvalues of a symmetric 4x4 by cyclic Jacobi sweeps.
std::array<double, 4> sym4_eigenvalues(double m[4][4]) {
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        const double theta = 0.5 * std::atan2(2 * m[p][q], m[q][q] - m[p][p]);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < 4; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < 4; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
  }
  std::array<double, 4> ev{m[0][0], m[1][1], m[2][2], m[3][3]};
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace

ClassificationResult classify_meridian(const Surface& surface, const GridSpec& grid,
                                       const TolerancePolicy& policy) {
  if (!surface.is_meridian()) throw NotAMeridian("classification requires a meridian payload");
  grid.validate();
  const MeridianPayload& payload = surface.payload();

  ClassificationResult res;
  const std::vector<double> us = grid.u_samples();
  const std::vector<double> vs = grid.v_samples();

  double kappa_lo = 0, kappa_hi = 0, kappa_abs = 0;
  bool first = true;
  for (double v : vs) {
    const double k = payload.curve(v).kappa;
    kappa_lo = first ? k : std::min(kappa_lo, k);
    kappa_hi = first ? k : std::max(kappa_hi, k);
    kappa_abs = std::max(kappa_abs, std::abs(k));
    first = false;
  }

  double ka_abs = 0, branch_gap = 0;
  bool degenerate = false;
  std::vector<ProfileSample> psamples;
  psamples.reserve(us.size());
  for (double u : us) {
    try {
      const ProfileSample p = payload.profile(u);
      psamples.push_back(p);
      ka_abs = std::max(ka_abs, std::abs(p.kappa_alpha));
      branch_gap = std::max(branch_gap, std::abs(p.kappa_alpha - p.gp / p.f));
    } catch (const ProfileDomainError&) {
      degenerate = true;
    }
  }

  res.kappa_is_zero = kappa_abs < kZeroTol;
  res.kappa_alpha_is_zero = !psamples.empty() && ka_abs < kZeroTol;
  res.kappa_constant = (kappa_hi - kappa_lo) < kConstTol;

  if (degenerate || psamples.empty()) {
    res.surface_case = MeridianCase::Degenerate;
  } else if (res.kappa_is_zero) {
    res.surface_case = MeridianCase::I;
  } else if (res.kappa_alpha_is_zero) {
    res.surface_case = MeridianCase::II;
  } else {
    res.surface_case = MeridianCase::III;
  }

  // Branch predicted from measured quantities alone.
  if (res.kappa_alpha_is_zero) {
    res.theorem2_branch = TheoremBranch::CaseI;
  } else if (res.kappa_is_zero && branch_gap < kConstTol) {
    res.theorem2_branch = TheoremBranch::CaseII;
  } else {
    res.theorem2_branch = TheoremBranch::NotSemiParallel;
  }

  // Cross-check against the engine and collect grid diagnostics.
  double sp_max = 0;
  double gram[4][4] = {};
  double pts[4][4] = {};  // second moments of sampled positions about the mean
  double mean[4] = {};
  double K_lo = 0, K_hi = 0;
  bool firstK = true;
  long npts = 0;
  std::vector<Vec4> positions;
  for (double u : us) {
    for (double v : vs) {
      Jet2 jet;
      try {
        jet = surface.jet(u, v, policy);
      } catch (const ProfileDomainError&) {
        continue;
      }
      const AdaptedFrame frame = surface.frame(u, v, policy);
      const SecondFundamentalForm sff = second_form(jet, frame);
      const double K = curvature_report(sff).K;
      K_lo = firstK ? K : std::min(K_lo, K);
      K_hi = firstK ? K : std::max(K_hi, K);
      firstK = false;
      const Verdict verdict = semiparallel_verdict(surface, u, v, policy);
      sp_max = std::max(sp_max, verdict.residual_norm);

      // Ambient normal components of the second derivatives.
      const Vec4* dd[3] = {&jet.Xuu, &jet.Xuv, &jet.Xvv};
      for (const Vec4* d : dd) {
        const Vec4 nc = frame.N1 * dot(*d, frame.N1) + frame.N2 * dot(*d, frame.N2);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) gram[i][j] += nc[i] * nc[j];
      }
      positions.push_back(jet.X);
      for (int i = 0; i < 4; ++i) mean[i] += jet.X[i];
      ++npts;
    }
  }
  res.semiparallel_residual_max = sp_max;
  res.K_min = K_lo;
  res.K_max = K_hi;

  const bool predicted = res.theorem2_branch != TheoremBranch::NotSemiParallel;
  const double sp_tol = surface.jet_kind() == JetKind::Analytic ? policy.residual_tol_analytic
                                                                : policy.residual_tol_numeric;
  const bool measured = sp_max < sp_tol;
  if (predicted != measured) res.theorem2_branch = TheoremBranch::Inconsistent;

  if (npts > 0) {
    std::array<double, 4> ev = sym4_eigenvalues(gram);
    const double scale = std::max(ev[0], 1e-300);
    int rank = 0;
    for (double e : ev)
      if (e > 1e-18 * scale) ++rank;
    res.normal_span_rank = rank;

    for (int i = 0; i < 4; ++i) mean[i] /= double(npts);
    for (const Vec4& x : positions)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) pts[i][j] += (x[i] - mean[i]) * (x[j] - mean[j]);
    std::array<double, 4> pev = sym4_eigenvalues(pts);
    res.hyperplanar = pev[3] < 1e-16 * std::max(pev[0], 1e-300);
  }

  for (const ProfileSample& s : psamples)
    res.ode_residual_max =
        std::max(res.ode_residual_max, std::abs(s.f * s.fpp - s.fp * s.fp + 1.0));
  return res;
}

double ode_residual(const Profile& profile, double u_min, double u_max, int samples) {
  if (samples < 2) throw ConfigError("ode_residual needs at least 2 samples");
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    const double u = u_min + (u_max - u_min) * double(i) / double(samples - 1);
    const ProfileSample s = profile(u);
    worst = std::max(worst, std::abs(s.f * s.fpp - s.fp * s.fp + 1.0));
  }
  return worst;
}

}  // namespace meridian
