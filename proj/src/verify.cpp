#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "meridian/report.hpp"

namespace meridian {

namespace {

struct Family {
  std::string name;
  Surface surface;
  GridSpec grid;
};

TolerancePolicy env_policy() {
  TolerancePolicy p;
  if (const char* env = std::getenv("MERIDIAN_FD_STEP")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) p.fd_step = v;
  }
  return p;
}

std::vector<Family> builtin_families() {
  std::vector<Family> fams;
  auto add = [&](std::string name, CurveSpec c, ProfileSpec p, GridSpec g) {
    fams.push_back({std::move(name), Surface::meridian({std::move(c), std::move(p)}), g});
  };
  add("great_circle+line", CurveSpec::great_circle(), ProfileSpec::line(M_PI / 4, 1.0, 0.0),
      {0.0, 1.0, 8, 0.0, 3.0, 8});
  add("great_circle+sphere_arc", CurveSpec::great_circle(), ProfileSpec::sphere_arc(1.0),
      {M_PI / 4, M_PI / 2, 8, 0.0, 3.0, 8});
  add("circle05+sphere_arc", CurveSpec::circle(0.5), ProfileSpec::sphere_arc(1.0),
      {M_PI / 4, M_PI / 2, 8, 0.0, 3.0, 8});
  add("circle1+sphere_arc", CurveSpec::circle(1.0), ProfileSpec::sphere_arc(1.0),
      {M_PI / 4, M_PI / 2, 8, 0.0, 3.0, 8});
  add("circle2+line", CurveSpec::circle(2.0), ProfileSpec::line(M_PI / 4, 1.0, 0.0),
      {0.0, 1.0, 8, 0.0, 3.0, 8});
  add("great_circle+printed_sqrt", CurveSpec::great_circle(), ProfileSpec::printed_sqrt(0.0, 1.0),
      {1.0, 2.0, 8, 0.0, 3.0, 8});
  add("circle1+printed_sqrt", CurveSpec::circle(1.0), ProfileSpec::printed_sqrt(1.0, 1.0),
      {2.0, 3.0, 8, 0.0, 3.0, 8});
  add("nonconst_kappa+line",
      CurveSpec::custom([](double v) { return 0.2 + 0.1 * std::sin(v); }),
      ProfileSpec::line(M_PI / 4, 1.0, 0.0), {0.0, 1.0, 5, 0.0, 2.0, 5});
  return fams;
}

std::vector<Family> builtin_immersions() {
  std::vector<Family> fams;
  fams.push_back({"plane", Surface::immersion([](double u, double v) { return Vec4{u, v, 0, 0}; }),
                  {-1, 1, 4, -1, 1, 4}});
  fams.push_back({"graph_squares",
                  Surface::immersion([](double u, double v) { return Vec4{u, v, u * u, v * v}; }),
                  {-0.5, 0.5, 4, -0.5, 0.5, 4}});
  fams.push_back(
      {"graph_product",
       Surface::immersion(
           [](double u, double v) { return Vec4{u, v, u * v, 0.5 * (u * u - v * v)}; }),
       {-0.5, 0.5, 4, -0.5, 0.5, 4}});
  return fams;
}

struct Check {
  std::ostringstream log;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    " << what << "\n";
    }
  }
  void expect_le(double value, double bound, const std::string& what) {
    if (!(value <= bound)) {
      ok = false;
      log << "    " << what << ": " << value << " > " << bound << "\n";
    }
  }
};

double frame_residual(const AdaptedFrame& fr) {
  const Vec4* w[4] = {&fr.X1, &fr.X2, &fr.N1, &fr.N2};
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      worst = std::max(worst, std::abs(dot(*w[i], *w[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

void group_frames(Check& c) {
  const TolerancePolicy policy = env_policy();
  std::vector<std::pair<std::string, CurveSpec>> curves = {
      {"great_circle", CurveSpec::great_circle()},
      {"circle(1)", CurveSpec::circle(1.0)},
      {"circle(-0.5)", CurveSpec::circle(-0.5)},
      {"custom", CurveSpec::custom([](double v) { return 0.3 + 0.1 * std::sin(v); })},
  };
  for (auto& [name, spec] : curves) {
    const SphericalCurve curve = make_spherical_curve(spec);
    for (int i = 0; i <= 20; ++i) {
      const double v = -3.0 + 6.0 * i / 20.0;
      const SphericalCurveSample s = curve(v);
      double worst = std::abs(dot(s.r, s.r) - 1);
      worst = std::max(worst, std::abs(dot(s.t, s.t) - 1));
      worst = std::max(worst, std::abs(dot(s.n, s.n) - 1));
      worst = std::max(worst, std::abs(dot(s.r, s.t)));
      worst = std::max(worst, std::abs(dot(s.r, s.n)));
      worst = std::max(worst, std::abs(dot(s.t, s.n)));
      c.expect_le(worst, 1e-8, name + " Frenet orthonormality at v=" + std::to_string(v));
    }
  }
  for (const Family& fam : builtin_families()) {
    for (double u : fam.grid.u_samples())
      for (double v : fam.grid.v_samples())
        c.expect_le(frame_residual(fam.surface.frame(u, v, policy)), 1e-12,
                    fam.name + " adapted frame orthonormality");
    const Profile& prof = fam.surface.payload().profile;
    c.expect_le(validate_arclength(prof, fam.grid.u_min, fam.grid.u_max, 100), 1e-12,
                fam.name + " arc-length constraint");
  }
}

void group_closed_form(Check& c) {
  const TolerancePolicy policy = env_policy();
  for (const Family& fam : builtin_families()) {
    if (fam.surface.payload().curve.spec().kind == CurveSpec::Kind::Custom)
      continue;  // numeric curve integration has its own noise floor
    for (double u : fam.grid.u_samples()) {
      for (double v : fam.grid.v_samples()) {
        const ProfileSample p = fam.surface.payload().profile(u);
        const double kappa = fam.surface.payload().curve(v).kappa;
        const AdaptedFrame frame = fam.surface.frame(u, v, policy);
        const SecondFundamentalForm numeric =
            second_form(fam.surface.numeric_jet(u, v, policy), frame);
        const double expected[2][3] = {{0.0, 0.0, kappa / p.f},
                                       {p.kappa_alpha, 0.0, p.gp / p.f}};
        for (int a = 0; a < 2; ++a)
          for (int k = 0; k < 3; ++k)
            c.expect_le(std::abs(numeric.h[a][k] - expected[a][k]),
                        1e-6 * (1.0 + std::abs(expected[a][k])),
                        fam.name + " numeric h vs closed form");
        const SecondFundamentalForm analytic =
            second_form(fam.surface.jet(u, v, policy), frame);
        const CurvatureReport rep = curvature_report(analytic);
        c.expect_le(std::abs(rep.K - p.kappa_alpha * p.gp / p.f), 1e-8, fam.name + " K formula");
        c.expect_le(rep.K_N, 1e-8, fam.name + " K_N = 0");
      }
    }
  }
}

void group_numeric_jets(Check& c) {
  const TolerancePolicy policy = env_policy();
  for (const Family& fam : builtin_families()) {
    if (fam.surface.payload().curve.spec().kind == CurveSpec::Kind::Custom) continue;
    for (double u : fam.grid.u_samples()) {
      for (double v : fam.grid.v_samples()) {
        const Jet2 a = fam.surface.jet(u, v, policy);
        const Jet2 n = fam.surface.numeric_jet(u, v, policy);
        const Vec4* pa[6] = {&a.X, &a.Xu, &a.Xv, &a.Xuu, &a.Xuv, &a.Xvv};
        const Vec4* pn[6] = {&n.X, &n.Xu, &n.Xv, &n.Xuu, &n.Xuv, &n.Xvv};
        for (int k = 0; k < 6; ++k)
          c.expect_le(norm(*pa[k] - *pn[k]), 1e-6, fam.name + " analytic vs numeric jet");
      }
    }
  }
}

void group_structural(Check& c) {
  const TolerancePolicy policy = env_policy();
  for (const Family& fam : builtin_families()) {
    for (double u : fam.grid.u_samples()) {
      for (double v : fam.grid.v_samples()) {
        const StructuralResiduals r = structural_residuals(fam.surface, u, v, policy);
        c.expect_le(r.gauss, 1e-8, fam.name + " gauss residual");
        c.expect_le(r.ricci, 1e-8, fam.name + " ricci residual");
        c.expect_le(r.codazzi, 1e-4, fam.name + " codazzi residual");
      }
    }
  }
  for (const Family& fam : builtin_immersions()) {
    for (double u : fam.grid.u_samples()) {
      for (double v : fam.grid.v_samples()) {
        const StructuralResiduals r = structural_residuals(fam.surface, u, v, policy);
        c.expect_le(r.gauss, 1e-6, fam.name + " gauss residual (numeric)");
        c.expect_le(r.ricci, 1e-6, fam.name + " ricci residual (numeric)");
        c.expect_le(r.codazzi, 1e-4, fam.name + " codazzi residual (numeric)");
      }
    }
  }
}

double route_gap(const SecondFundamentalForm& sff) {
  const double K = curvature_report(sff).K;
  const SemiParallelTensor a = rbar_h_formula(sff, K);
  const SemiParallelTensor b = rbar_h_direct(sff, K);
  double gap = 0;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 2; ++q) gap = std::max(gap, std::abs(a.S[p][q] - b.S[p][q]));
  return gap;
}

void group_routes(Check& c) {
  const TolerancePolicy policy = env_policy();
  for (const Family& fam : builtin_families()) {
    for (double u : fam.grid.u_samples())
      for (double v : fam.grid.v_samples()) {
        const SecondFundamentalForm sff =
            second_form(fam.surface.jet(u, v, policy), fam.surface.frame(u, v, policy));
        c.expect_le(route_gap(sff), 1e-10, fam.name + " semi-parallel route agreement");
      }
  }
  std::mt19937 rng(20240317);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    SecondFundamentalForm sff;
    for (int a = 0; a < 2; ++a)
      for (int k = 0; k < 3; ++k) sff.h[a][k] = dist(rng);
    c.expect_le(route_gap(sff), 1e-10, "random sff route agreement");
  }
}

void group_gauge(Check& c) {
  const TolerancePolicy policy = env_policy();
  std::mt19937 rng(7001);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  for (const Family& fam : builtin_families()) {
    const double u = 0.5 * (fam.grid.u_min + fam.grid.u_max);
    const double v = 0.5 * (fam.grid.v_min + fam.grid.v_max);
    const SecondFundamentalForm sff =
        second_form(fam.surface.jet(u, v, policy), fam.surface.frame(u, v, policy));
    const CurvatureReport base = curvature_report(sff);
    const double base_sp = rbar_h_formula(sff, base.K).residual_norm;
    for (int i = 0; i < 16; ++i) {
      const SecondFundamentalForm rot = rotate_normal_gauge(sff, angle(rng));
      const CurvatureReport rep = curvature_report(rot);
      c.expect_le(std::abs(rep.K - base.K), 1e-9, fam.name + " K gauge invariance");
      c.expect_le(std::abs(rep.K_N - base.K_N), 1e-9, fam.name + " K_N gauge invariance");
      c.expect_le(std::abs(rep.H_norm - base.H_norm), 1e-9, fam.name + " |H| gauge invariance");
      c.expect_le(std::abs(rbar_h_formula(rot, rep.K).residual_norm - base_sp), 1e-9,
                  fam.name + " sp residual gauge invariance");
    }
  }
}

void group_theorem2(Check& c) {
  const TolerancePolicy policy = env_policy();
  struct Expected {
    std::string name;
    TheoremBranch branch;
  };
  const std::vector<Expected> expected = {
      {"great_circle+line", TheoremBranch::CaseI},
      {"great_circle+sphere_arc", TheoremBranch::CaseII},
      {"circle05+sphere_arc", TheoremBranch::NotSemiParallel},
      {"circle1+sphere_arc", TheoremBranch::NotSemiParallel},
      {"circle2+line", TheoremBranch::CaseI},
      {"great_circle+printed_sqrt", TheoremBranch::NotSemiParallel},
      {"circle1+printed_sqrt", TheoremBranch::NotSemiParallel},
      {"nonconst_kappa+line", TheoremBranch::CaseI},
  };
  const std::vector<Family> fams = builtin_families();
  for (size_t i = 0; i < fams.size(); ++i) {
    const ClassificationResult cr = classify_meridian(fams[i].surface, fams[i].grid, policy);
    c.expect(cr.theorem2_branch != TheoremBranch::Inconsistent,
             fams[i].name + ": classifier and engine disagree");
    c.expect(cr.theorem2_branch == expected[i].branch,
             fams[i].name + ": branch " + to_string(cr.theorem2_branch) + ", expected " +
                 to_string(expected[i].branch));
  }
}

void group_ode(Check& c, std::ostream& out) {
  const Profile arc = make_profile(ProfileSpec::sphere_arc(1.0));
  c.expect_le(ode_residual(arc, M_PI / 4, M_PI / 2, 50), 1e-10, "sphere_arc ODE residual");

  const double ab[3][2] = {{0, 1}, {1, 1}, {0, 2}};
  const double ulo[3] = {1.0, 2.0, 1.0};
  for (int q = 0; q < 3; ++q) {
    const double a = ab[q][0], b = ab[q][1];
    const Profile prof = make_profile(ProfileSpec::printed_sqrt(a, b));
    for (int i = 0; i < 50; ++i) {
      const double u = ulo[q] + 1.0 * i / 49.0;
      const ProfileSample s = prof(u);
      const double res = std::abs(s.f * s.fpp - s.fp * s.fp + 1.0);
      const double expect = 2 * (2 * b - a * a) / (s.f * s.f);
      c.expect_le(std::abs(res - expect), 1e-8, "printed_sqrt ODE residual formula");
    }
  }
  out << "INFO ode.residuals: the closed-form semi-parallel profile satisfies"
         " f*f'' + f'^2 - 1 = 0, not the displayed ODE f*f'' - f'^2 + 1 = 0;"
         " its displayed-ODE residual is 2(2b - a^2)/f^2 (reported above, not a failure).\n";
  out << "INFO ode.residuals: sphere_arc satisfies the displayed ODE exactly and"
         " yields the round sphere.\n";
}

}  // namespace

int run_verify(const std::string& filter, std::ostream& out) {
  struct Group {
    std::string name;
    std::function<void(Check&, std::ostream&)> fn;
  };
  const std::vector<Group> groups = {
      {"frames.orthonormality", [](Check& c, std::ostream&) { group_frames(c); }},
      {"meridian.closed_form", [](Check& c, std::ostream&) { group_closed_form(c); }},
      {"meridian.numeric_jets", [](Check& c, std::ostream&) { group_numeric_jets(c); }},
      {"structural.residuals", [](Check& c, std::ostream&) { group_structural(c); }},
      {"routes.semiparallel", [](Check& c, std::ostream&) { group_routes(c); }},
      {"gauge.invariance", [](Check& c, std::ostream&) { group_gauge(c); }},
      {"meridian.theorem2", [](Check& c, std::ostream&) { group_theorem2(c); }},
      {"ode.residuals", [](Check& c, std::ostream& o) { group_ode(c, o); }},
  };

  int failed = 0;
  for (const Group& g : groups) {
    if (!filter.empty() && g.name.find(filter) == std::string::npos) continue;
    Check check;
    try {
      g.fn(check, out);
    } catch (const Error& e) {
      check.ok = false;
      check.log << "    unexpected error: " << e.what() << "\n";
    }
    if (check.ok) {
      out << "PASS " << g.name << "\n";
    } else {
      out << "FAIL " << g.name << "\n" << check.log.str();
      ++failed;
    }
  }
  return failed;
}

}  // namespace meridian
