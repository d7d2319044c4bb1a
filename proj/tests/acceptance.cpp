// Acceptance suite: one PASS/FAIL line per criterion, with pinned tolerances.
// Exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "meridian/report.hpp"

using namespace meridian;

namespace {

const TolerancePolicy kPolicy{};

struct Criterion {
  std::string summary;
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require_le(double value, double bound, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: %.6g > %.6g", what.c_str(), value, bound);
    require(value <= bound, buf);
  }
};

struct NamedSurface {
  std::string name;
  Surface surface;
  GridSpec grid;
};

GridSpec grid20(double ulo, double uhi, double vlo = 0.0, double vhi = 3.0) {
  return GridSpec{ulo, uhi, 20, vlo, vhi, 20};
}

std::vector<NamedSurface> closed_form_families() {
  return {
      {"great_circle+line",
       Surface::meridian({CurveSpec::great_circle(), ProfileSpec::line(M_PI / 4, 1.0, 0.0)}),
       grid20(0.0, 1.0)},
      {"great_circle+sphere_arc",
       Surface::meridian({CurveSpec::great_circle(), ProfileSpec::sphere_arc(1.0)}),
       grid20(M_PI / 4, M_PI / 2)},
      {"circle1+sphere_arc",
       Surface::meridian({CurveSpec::circle(1.0), ProfileSpec::sphere_arc(1.0)}),
       grid20(M_PI / 4, M_PI / 2)},
      {"great_circle+printed_sqrt",
       Surface::meridian({CurveSpec::great_circle(), ProfileSpec::printed_sqrt(0.0, 1.0)}),
       grid20(1.0, 2.0)},
      {"circle2+printed_sqrt",
       Surface::meridian({CurveSpec::circle(2.0), ProfileSpec::printed_sqrt(1.0, 1.0)}),
       grid20(2.0, 3.0)},
  };
}

// C1: numeric second fundamental form matches the meridian closed form on
// 20x20 grids to 1e-6 relative; K = kappa_alpha g'/f and K_N = 0 to 1e-8.
void criterion1(Criterion& c) {
  c.summary = "meridian second form, K formula and K_N = 0 on 20x20 grids";
  for (const NamedSurface& fam : closed_form_families()) {
    for (double u : fam.grid.u_samples()) {
      for (double v : fam.grid.v_samples()) {
        const ProfileSample p = fam.surface.payload().profile(u);
        const double kappa = fam.surface.payload().curve(v).kappa;
        const AdaptedFrame frame = fam.surface.frame(u, v, kPolicy);
        const SecondFundamentalForm numeric =
            second_form(fam.surface.numeric_jet(u, v, kPolicy), frame);
        const double expected[2][3] = {{0.0, 0.0, kappa / p.f},
                                       {p.kappa_alpha, 0.0, p.gp / p.f}};
        for (int a = 0; a < 2; ++a)
          for (int k = 0; k < 3; ++k)
            c.require_le(std::abs(numeric.h[a][k] - expected[a][k]),
                         1e-6 * (1.0 + std::abs(expected[a][k])),
                         fam.name + " numeric h[" + std::to_string(a) + "][" +
                             std::to_string(k) + "]");
        const CurvatureReport rep =
            curvature_report(second_form(fam.surface.jet(u, v, kPolicy), frame));
        c.require_le(std::abs(rep.K - p.kappa_alpha * p.gp / p.f), 1e-8,
                     fam.name + " K = kappa_alpha g'/f");
        c.require_le(rep.K_N, 1e-8, fam.name + " K_N = 0");
      }
    }
  }
}

// C2: Gauss/Ricci residuals below 1e-8 (analytic jets) / 1e-6 (numeric jets),
// Codazzi residual below 1e-4 everywhere sampled.
void criterion2(Criterion& c) {
  c.summary = "structural residuals (Gauss/Ricci/Codazzi) within tolerance";
  for (const NamedSurface& fam : closed_form_families()) {
    for (double u : fam.grid.u_samples()) {
      for (double v : fam.grid.v_samples()) {
        const StructuralResiduals r = structural_residuals(fam.surface, u, v, kPolicy);
        c.require_le(r.gauss, 1e-8, fam.name + " gauss");
        c.require_le(r.ricci, 1e-8, fam.name + " ricci");
        c.require_le(r.codazzi, 1e-4, fam.name + " codazzi");
      }
    }
  }
  const std::vector<NamedSurface> numeric = {
      {"plane", Surface::immersion([](double u, double v) { return Vec4{u, v, 0, 0}; }),
       GridSpec{-1, 1, 5, -1, 1, 5}},
      {"graph_squares",
       Surface::immersion([](double u, double v) { return Vec4{u, v, u * u, v * v}; }),
       GridSpec{-0.5, 0.5, 5, -0.5, 0.5, 5}},
      {"graph_product",
       Surface::immersion(
           [](double u, double v) { return Vec4{u, v, u * v, 0.5 * (u * u - v * v)}; }),
       GridSpec{-0.5, 0.5, 5, -0.5, 0.5, 5}},
  };
  for (const NamedSurface& fam : numeric) {
    for (double u : fam.grid.u_samples()) {
      for (double v : fam.grid.v_samples()) {
        const StructuralResiduals r = structural_residuals(fam.surface, u, v, kPolicy);
        c.require_le(r.gauss, 1e-6, fam.name + " gauss (numeric)");
        c.require_le(r.ricci, 1e-6, fam.name + " ricci (numeric)");
        c.require_le(r.codazzi, 1e-4, fam.name + " codazzi (numeric)");
      }
    }
  }
}

// C3: the component-formula and direct-definition routes for (Rbar . h) agree
// to 1e-10 on the families and on 100 random second forms.
void criterion3(Criterion& c) {
  c.summary = "semi-parallel tensor routes agree to 1e-10";
  auto gap = [](const SecondFundamentalForm& sff, double K) {
    const SemiParallelTensor a = rbar_h_formula(sff, K);
    const SemiParallelTensor b = rbar_h_direct(sff, K);
    double worst = 0;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 2; ++q) worst = std::max(worst, std::abs(a.S[p][q] - b.S[p][q]));
    return worst;
  };
  for (const NamedSurface& fam : closed_form_families()) {
    for (double u : fam.grid.u_samples()) {
      for (double v : fam.grid.v_samples()) {
        const SecondFundamentalForm sff =
            second_form(fam.surface.jet(u, v, kPolicy), fam.surface.frame(u, v, kPolicy));
        c.require_le(gap(sff, curvature_report(sff).K), 1e-10, fam.name + " route gap");
      }
    }
  }
  std::mt19937 rng(90210);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    SecondFundamentalForm sff;
    for (int a = 0; a < 2; ++a)
      for (int k = 0; k < 3; ++k) sff.h[a][k] = dist(rng);
    c.require_le(gap(sff, dist(rng)), 1e-10, "random sff route gap #" + std::to_string(i));
  }
}

// C4: the semi-parallel families are recognized: flat line-profile meridians
// for several curvature laws, and the totally umbilical sphere-arc meridian
// (which additionally satisfies K = |H|^2 with vanishing umbilicity
// deviation).
void criterion4(Criterion& c) {
  c.summary = "semi-parallel families have residual < 1e-8";
  std::vector<NamedSurface> flat;
  const std::pair<std::string, CurveSpec> curves[] = {
      {"great_circle", CurveSpec::great_circle()},
      {"circle05", CurveSpec::circle(0.5)},
      {"circle1", CurveSpec::circle(1.0)},
      {"nonconst", CurveSpec::custom([](double v) { return 0.2 + 0.1 * std::sin(v); })},
  };
  for (const auto& [name, spec] : curves)
    flat.push_back({name + "+line",
                    Surface::meridian({spec, ProfileSpec::line(M_PI / 4, 1.0, 0.0)}),
                    grid20(0.0, 1.0)});
  for (const NamedSurface& fam : flat) {
    for (double u : fam.grid.u_samples())
      for (double v : fam.grid.v_samples()) {
        const Verdict verdict = semiparallel_verdict(fam.surface, u, v, kPolicy);
        c.require(verdict.semi_parallel, fam.name + " not flagged semi-parallel");
        c.require_le(verdict.residual_norm, 1e-8, fam.name + " sp residual");
      }
  }
  const Surface sphere =
      Surface::meridian({CurveSpec::great_circle(), ProfileSpec::sphere_arc(1.0)});
  const GridSpec g = grid20(M_PI / 4, M_PI / 2);
  for (double u : g.u_samples())
    for (double v : g.v_samples()) {
      const Verdict verdict = semiparallel_verdict(sphere, u, v, kPolicy);
      c.require(verdict.semi_parallel, "sphere-arc meridian not flagged semi-parallel");
      c.require_le(verdict.residual_norm, 1e-8, "sphere-arc sp residual");
      const CurvatureReport rep = curvature_report(
          second_form(sphere.jet(u, v, kPolicy), sphere.frame(u, v, kPolicy)));
      c.require_le(rep.umbilicity_deviation, 1e-8, "sphere-arc umbilicity deviation");
      c.require_le(std::abs(rep.K - rep.H_norm * rep.H_norm), 1e-8, "sphere-arc K = |H|^2");
    }
}

// C5: the non-semi-parallel families are rejected with quantified residuals:
// circle(1)+sphere_arc has residual >= 1 on [pi/4, pi/2], and the explicit
// sqrt profile on a great circle has residual 4 sqrt(2)/27 at u = 1 (5%).
void criterion5(Criterion& c) {
  c.summary = "non-semi-parallel families rejected with the predicted residuals";
  const Surface tube =
      Surface::meridian({CurveSpec::circle(1.0), ProfileSpec::sphere_arc(1.0)});
  const GridSpec g = grid20(M_PI / 4, M_PI / 2);
  for (double u : g.u_samples())
    for (double v : g.v_samples()) {
      const Verdict verdict = semiparallel_verdict(tube, u, v, kPolicy);
      c.require(!verdict.semi_parallel, "circle1+sphere_arc wrongly semi-parallel");
      c.require(verdict.residual_norm >= 1.0 - 1e-9,
                "circle1+sphere_arc residual below the 1/sin(u) bound");
    }
  const Surface sqrt_prof =
      Surface::meridian({CurveSpec::great_circle(), ProfileSpec::printed_sqrt(0.0, 1.0)});
  const Verdict verdict = semiparallel_verdict(sqrt_prof, 1.0, 0.0, kPolicy);
  const double expected = 4.0 * std::sqrt(2.0) / 27.0;  // = 0.2095...
  c.require(!verdict.semi_parallel, "sqrt profile wrongly semi-parallel");
  c.require_le(std::abs(verdict.residual_norm - expected), 0.05 * expected,
               "sqrt profile residual at u=1");
}

// C6: profile ODE residual |f f'' - f'^2 + 1|: below 1e-10 for the sphere
// arc; equal to 2(2b - a^2)/f^2 within 1e-8 for the sqrt profiles.
void criterion6(Criterion& c) {
  c.summary = "profile ODE residuals match the closed forms";
  c.require_le(ode_residual(make_profile(ProfileSpec::sphere_arc(1.0)), M_PI / 4, M_PI / 2, 100),
               1e-10, "sphere_arc ODE residual");
  const double ab[3][2] = {{0, 1}, {1, 1}, {0, 2}};
  const double ulo[3] = {1.0, 2.0, 1.0};
  for (int q = 0; q < 3; ++q) {
    const double a = ab[q][0], b = ab[q][1];
    const Profile prof = make_profile(ProfileSpec::printed_sqrt(a, b));
    for (int i = 0; i < 100; ++i) {
      const double u = ulo[q] + 1.0 * i / 99.0;
      const ProfileSample s = prof(u);
      const double res = std::abs(s.f * s.fpp - s.fp * s.fp + 1.0);
      c.require_le(std::abs(res - 2 * (2 * b - a * a) / (s.f * s.f)), 1e-8,
                   "sqrt profile ODE residual identity (a=" + std::to_string(a) +
                       ", b=" + std::to_string(b) + ")");
    }
  }
}

// C7: K, K_N, |H| and the semi-parallel residual are invariant under 16
// random rotations of the normal frame, to 1e-9.
void criterion7(Criterion& c) {
  c.summary = "scalar invariants unchanged under normal-frame rotations";
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  for (const NamedSurface& fam : closed_form_families()) {
    const double u = 0.5 * (fam.grid.u_min + fam.grid.u_max);
    const double v = 0.5 * (fam.grid.v_min + fam.grid.v_max);
    const SecondFundamentalForm sff =
        second_form(fam.surface.jet(u, v, kPolicy), fam.surface.frame(u, v, kPolicy));
    const CurvatureReport base = curvature_report(sff);
    const double base_sp = rbar_h_formula(sff, base.K).residual_norm;
    for (int i = 0; i < 16; ++i) {
      const SecondFundamentalForm rot = rotate_normal_gauge(sff, angle(rng));
      const CurvatureReport rep = curvature_report(rot);
      c.require_le(std::abs(rep.K - base.K), 1e-9, fam.name + " K under gauge");
      c.require_le(std::abs(rep.K_N - base.K_N), 1e-9, fam.name + " K_N under gauge");
      c.require_le(std::abs(rep.H_norm - base.H_norm), 1e-9, fam.name + " |H| under gauge");
      c.require_le(std::abs(rbar_h_formula(rot, rep.K).residual_norm - base_sp), 1e-9,
                   fam.name + " sp residual under gauge");
    }
  }
}

// C8: the analysis report is byte-for-byte deterministic for a fixed config.
void criterion8(Criterion& c) {
  c.summary = "analysis output is byte-deterministic";
  const char* config = R"({
    "surface": {
      "family": "meridian",
      "curve": {"kind": "circle", "kappa": 1.0},
      "profile": {"kind": "sphere_arc", "k": 1.0}
    },
    "grid": {"u": [0.7853981633974483, 1.5707963267948966, 6], "v": [0.0, 2.0, 5]}
  })";
  const AnalysisConfig cfg = parse_config(config);
  for (const std::string format : {"csv", "json"}) {
    const AnalyzeResult first = run_analyze(cfg, format);
    const AnalyzeResult second = run_analyze(cfg, format);
    c.require(first.bytes == second.bytes, format + " output differs between runs");
    c.require(!first.bytes.empty(), format + " output is empty");
  }
}

}  // namespace

int main() {
  const std::vector<std::function<void(Criterion&)>> criteria = {
      criterion1, criterion2, criterion3, criterion4,
      criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i](c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("unexpected error: ") + e.what();
    }
    if (c.ok) {
      std::printf("PASS C%zu: %s\n", i + 1, c.summary.c_str());
    } else {
      std::printf("FAIL C%zu: %s\n      %s\n", i + 1, c.summary.c_str(), c.detail.c_str());
      ++failed;
    }
  }
  return failed;
}
