#include <doctest.h>

#include <cmath>
#include <random>

#include "meridian/invariants.hpp"

using namespace meridian;

namespace {

const TolerancePolicy kPolicy{};

Surface unit_sphere() {
  return Surface::meridian({CurveSpec::great_circle(), ProfileSpec::sphere_arc(1.0)});
}

SecondFundamentalForm meridian_sff(const Surface& s, double u, double v) {
  return second_form(s.jet(u, v, kPolicy), s.frame(u, v, kPolicy));
}

}  // namespace

TEST_CASE("first form basics") {
  const Surface plane = Surface::immersion([](double u, double v) { return Vec4{u, v, 0, 0}; });
  const FirstFundamentalForm ff = first_form(plane.jet(0.2, -0.4, kPolicy), kPolicy);
  CHECK(ff.E == doctest::Approx(1.0));
  CHECK(ff.F == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(ff.G == doctest::Approx(1.0));

  const Surface scaled =
      Surface::immersion([](double u, double v) { return Vec4{2 * u, v, 0, 0}; });
  CHECK(first_form(scaled.jet(0.0, 0.0, kPolicy), kPolicy).E == doctest::Approx(4.0));

  const Surface sphere = unit_sphere();
  const FirstFundamentalForm fm = first_form(sphere.jet(M_PI / 2, 0.3, kPolicy), kPolicy);
  CHECK(fm.E == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fm.F == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fm.G == doctest::Approx(1.0).epsilon(1e-12));

  Jet2 degenerate;
  degenerate.Xu = {1, 0, 0, 0};
  degenerate.Xv = {2, 0, 0, 0};
  CHECK_THROWS_AS((void)first_form(degenerate, kPolicy), DegenerateTangentPlane);
}

TEST_CASE("second form matches the meridian closed form") {
  const Surface s = Surface::meridian(
      {CurveSpec::circle(1.5), ProfileSpec::printed_sqrt(0.0, 1.0)});
  for (double u : {1.0, 1.4, 2.0}) {
    for (double v : {0.0, 0.8}) {
      const SecondFundamentalForm sff = meridian_sff(s, u, v);
      const ProfileSample p = s.payload().profile(u);
      const double kappa = s.payload().curve(v).kappa;
      CHECK(std::abs(sff.coeff(0, 0, 0)) < 1e-12);
      CHECK(std::abs(sff.coeff(0, 0, 1)) < 1e-12);
      CHECK(sff.coeff(0, 1, 1) == doctest::Approx(kappa / p.f).epsilon(1e-12));
      CHECK(sff.coeff(1, 0, 0) == doctest::Approx(p.kappa_alpha).epsilon(1e-12));
      CHECK(std::abs(sff.coeff(1, 0, 1)) < 1e-12);
      CHECK(sff.coeff(1, 1, 1) == doctest::Approx(p.gp / p.f).epsilon(1e-12));
    }
  }
}

TEST_CASE("plane is totally geodesic") {
  const Surface plane = Surface::immersion([](double u, double v) { return Vec4{u, v, 0, 0}; });
  const Jet2 j = plane.jet(0.1, 0.2, kPolicy);
  const SecondFundamentalForm sff = second_form(j, plane.frame(0.1, 0.2, kPolicy));
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k < 3; ++k) CHECK(std::abs(sff.h[a][k]) < 1e-8);
}

TEST_CASE("graph immersion second form at the origin") {
  const Surface g =
      Surface::immersion([](double u, double v) { return Vec4{u, v, u * u, v * v}; });
  const SecondFundamentalForm sff = second_form(g.jet(0, 0, kPolicy), g.frame(0, 0, kPolicy));
  CHECK(sff.coeff(0, 0, 0) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(sff.coeff(1, 1, 1) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(std::abs(sff.coeff(0, 0, 1)) < 1e-8);
  CHECK(std::abs(sff.coeff(1, 0, 1)) < 1e-8);
  CHECK(std::abs(sff.coeff(0, 1, 1)) < 1e-8);
  CHECK(std::abs(sff.coeff(1, 0, 0)) < 1e-8);
}

TEST_CASE("shape operators of the meridian closed form") {
  const Surface s = Surface::meridian(
      {CurveSpec::circle(1.0), ProfileSpec::sphere_arc(1.0)});
  const double u = M_PI / 3, v = 0.4;
  const ShapeOperatorPair ops = shape_operators(meridian_sff(s, u, v));
  const ProfileSample p = s.payload().profile(u);
  CHECK(ops.A1.m[0][0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ops.A1.m[1][1] == doctest::Approx(1.0 / p.f).epsilon(1e-12));
  CHECK(ops.A2.m[0][0] == doctest::Approx(p.kappa_alpha).epsilon(1e-12));
  CHECK(ops.A2.m[1][1] == doctest::Approx(p.gp / p.f).epsilon(1e-12));
  CHECK(std::abs(ops.A1.m[0][1]) < 1e-12);
  CHECK(std::abs(ops.A2.m[0][1]) < 1e-12);
}

TEST_CASE("unit-sphere meridian is umbilical with A2 = I") {
  const Surface s = unit_sphere();
  const ShapeOperatorPair ops = shape_operators(meridian_sff(s, M_PI / 2, 0.1));
  CHECK(frobenius(ops.A1) < 1e-12);
  CHECK(frobenius(ops.A2 - Mat2::identity()) < 1e-12);
}

TEST_CASE("curvature report on the meridian families") {
  const Surface s = Surface::meridian(
      {CurveSpec::great_circle(), ProfileSpec::printed_sqrt(0.0, 1.0)});
  const SecondFundamentalForm sff = meridian_sff(s, 1.0, 0.0);
  const CurvatureReport rep = curvature_report(sff);
  CHECK(rep.K == doctest::Approx(-2.0 / 9.0).epsilon(1e-12));
  CHECK(rep.K_N < 1e-12);

  const CurvatureReport sphere = curvature_report(meridian_sff(unit_sphere(), M_PI / 2, 0.0));
  CHECK(sphere.K == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sphere.H_norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sphere.hH2_minus_3K == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(sphere.umbilicity_deviation < 1e-12);
  CHECK(sphere.isotropy_deviation < 1e-12);
}

TEST_CASE("K route agreement and meridian K formula") {
  const Surface s = Surface::meridian(
      {CurveSpec::circle(0.5), ProfileSpec::sphere_arc(1.0)});
  for (double u : {M_PI / 4, M_PI / 2.5}) {
    for (double v : {0.0, 1.1}) {
      const SecondFundamentalForm sff = meridian_sff(s, u, v);
      const CurvatureReport rep = curvature_report(sff);
      const ProfileSample p = s.payload().profile(u);
      CHECK(rep.K == doctest::Approx(p.kappa_alpha * p.gp / p.f).epsilon(1e-10));
      CHECK(std::abs(rep.K - gauss_curvature_shape_route(shape_operators(sff))) < 1e-10);
    }
  }
}

TEST_CASE("normal curvature operator routes agree; hand value for the product graph") {
  const Surface g = Surface::immersion(
      [](double u, double v) { return Vec4{u, v, u * v, 0.5 * (u * u - v * v)}; });
  const SecondFundamentalForm sff = second_form(g.jet(0, 0, kPolicy), g.frame(0, 0, kPolicy));
  const NormalCurvatureOperator nc = normal_curvature_operator(sff);
  CHECK(std::abs(nc.commutator[0][1]) == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(nc.route_mismatch < 1e-10);

  SecondFundamentalForm zero;
  const NormalCurvatureOperator z = normal_curvature_operator(zero);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(z.expansion[a][b] == 0.0);
}

TEST_CASE("ricci route agreement on random second forms") {
  std::mt19937 rng(5150);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    SecondFundamentalForm sff;
    for (int a = 0; a < 2; ++a)
      for (int k = 0; k < 3; ++k) sff.h[a][k] = dist(rng);
    CHECK(normal_curvature_operator(sff).route_mismatch < 1e-10);
  }
}

TEST_CASE("flat normal connection iff commuting shape operators") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    SecondFundamentalForm sff;
    for (int a = 0; a < 2; ++a)
      for (int k = 0; k < 3; ++k) sff.h[a][k] = dist(rng);
    const CurvatureReport rep = curvature_report(sff);
    const ShapeOperatorPair ops = shape_operators(sff);
    const double comm = frobenius(commutator(ops.A1, ops.A2));
    // For 2x2 symmetric operators the commutator is antisymmetric, so its
    // Frobenius norm is sqrt(2) |K_N|.
    CHECK(comm == doctest::Approx(std::sqrt(2.0) * rep.K_N).epsilon(1e-9));
  }
}

TEST_CASE("isotropy deviation closed form vs dense sampling") {
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int i = 0; i < 100; ++i) {
    SecondFundamentalForm sff;
    for (int a = 0; a < 2; ++a)
      for (int k = 0; k < 3; ++k) sff.h[a][k] = dist(rng);
    const CurvatureReport rep = curvature_report(sff);
    double lo = 1e300, hi = -1e300;
    for (int t = 0; t < 20000; ++t) {
      const double theta = M_PI * t / 20000.0;
      const double c = std::cos(theta), s = std::sin(theta);
      double n2 = 0;
      for (int a = 0; a < 2; ++a) {
        const double comp = c * c * sff.coeff(a, 0, 0) + 2 * c * s * sff.coeff(a, 0, 1) +
                            s * s * sff.coeff(a, 1, 1);
        n2 += comp * comp;
      }
      const double n = std::sqrt(n2);
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    // The sampled range carries O(step^2) discretization error.
    CHECK(rep.isotropy_deviation == doctest::Approx(hi - lo).epsilon(1e-4));
  }
}

TEST_CASE("gauge invariance of scalar outputs") {
  const Surface s = Surface::meridian(
      {CurveSpec::circle(1.0), ProfileSpec::printed_sqrt(1.0, 1.0)});
  const SecondFundamentalForm sff = meridian_sff(s, 2.3, 0.7);
  const CurvatureReport base = curvature_report(sff);
  std::mt19937 rng(88);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  for (int i = 0; i < 16; ++i) {
    const CurvatureReport rep = curvature_report(rotate_normal_gauge(sff, angle(rng)));
    CHECK(std::abs(rep.K - base.K) < 1e-9);
    CHECK(std::abs(rep.K_N - base.K_N) < 1e-9);
    CHECK(std::abs(rep.H_norm - base.H_norm) < 1e-9);
    CHECK(std::abs(rep.isotropy_deviation - base.isotropy_deviation) < 1e-9);
    CHECK(std::abs(rep.hH2_minus_3K - base.hH2_minus_3K) < 1e-9);
  }
}

TEST_CASE("structural residuals vanish on built-in surfaces") {
  const Surface sphere = unit_sphere();
  const StructuralResiduals r = structural_residuals(sphere, M_PI / 2, 0.2, kPolicy);
  CHECK(r.gauss < 1e-8);
  CHECK(r.ricci < 1e-8);
  CHECK(r.codazzi < 1e-4);

  const Surface m = Surface::meridian(
      {CurveSpec::circle(2.0), ProfileSpec::printed_sqrt(0.0, 2.0)});
  const StructuralResiduals rm = structural_residuals(m, 1.5, 0.9, kPolicy);
  CHECK(rm.gauss < 1e-8);
  CHECK(rm.ricci < 1e-8);
  CHECK(rm.codazzi < 1e-4);

  const Surface g = Surface::immersion(
      [](double u, double v) { return Vec4{u, v, u * v, 0.5 * (u * u - v * v)}; });
  const StructuralResiduals rg = structural_residuals(g, 0.1, -0.2, kPolicy);
  CHECK(rg.gauss < 1e-6);
  CHECK(rg.ricci < 1e-6);
  CHECK(rg.codazzi < 1e-4);
}

TEST_CASE("a corrupted second form breaks the Gauss identity") {
  const Surface s = unit_sphere();
  SecondFundamentalForm sff = meridian_sff(s, M_PI / 2, 0.0);
  const ShapeOperatorPair clean_ops = shape_operators(sff);
  sff.coeff(1, 0, 0) += 0.1;
  const double k_corrupted = curvature_report(sff).K;
  const double k_clean = gauss_curvature_shape_route(clean_ops);
  CHECK(std::abs(k_clean - k_corrupted) > 0.01);
}
