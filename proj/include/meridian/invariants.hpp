#ifndef MERIDIAN_INVARIANTS_HPP
#define MERIDIAN_INVARIANTS_HPP

#include "meridian/surface.hpp"

namespace meridian {

struct FirstFundamentalForm {
  double E = 0, F = 0, G = 0;
  double W2 = 0;  // EG - F^2
};

// Coefficients h^alpha_ij in an orthonormal adapted frame; symmetric in (i,j).
struct SecondFundamentalForm {
  double h[2][3] = {{0, 0, 0}, {0, 0, 0}};  // [alpha][{11,12,22}]

  double coeff(int alpha, int i, int j) const { return h[alpha][i + j]; }  // i,j in {0,1}
  double& coeff(int alpha, int i, int j) { return h[alpha][i + j]; }

  // Normal coordinates of h(X_i, X_j) on (N1, N2).
  void hvec(int i, int j, double out[2]) const {
    out[0] = coeff(0, i, j);
    out[1] = coeff(1, i, j);
  }
};

struct ShapeOperatorPair {
  Mat2 A1, A2;
};

struct CurvatureReport {
  double K = 0;        // <h11,h22> - |h12|^2
  double K_N = 0;      // |<Rperp(X1,X2)N1, N2>|
  double H[2] = {0, 0};  // mean curvature vector on (N1,N2)
  double H_norm = 0;
  double umbilicity_deviation = 0;  // max_alpha |A_alpha - (tr A_alpha / 2) I|_F
  double isotropy_deviation = 0;    // max - min of |h(X,X)| over unit X
  double hH2_minus_3K = 0;
};

// Coefficients <Rperp(X1,X2) N_alpha, N_beta> by two routes.
struct NormalCurvatureOperator {
  double expansion[2][2] = {{0, 0}, {0, 0}};   // substitution of (B5)/(B4) into (B9)
  double commutator[2][2] = {{0, 0}, {0, 0}};  // <[A_alpha, A_beta] X1, X2>
  double route_mismatch = 0;
};

struct StructuralResiduals {
  double gauss = 0;
  double ricci = 0;
  double codazzi = 0;
};

FirstFundamentalForm first_form(const Jet2& jet, const TolerancePolicy& policy);

// Projects the coordinate second derivatives onto the normal pair and changes
// basis from (X_u, X_v) to the orthonormal tangent pair of the frame.
SecondFundamentalForm second_form(const Jet2& jet, const AdaptedFrame& frame);

ShapeOperatorPair shape_operators(const SecondFundamentalForm& sff);

CurvatureReport curvature_report(const SecondFundamentalForm& sff);

// Gaussian curvature by contraction of the shape-operator curvature tensor;
// independent code path from the inner-product formula in curvature_report.
double gauss_curvature_shape_route(const ShapeOperatorPair& ops);

NormalCurvatureOperator normal_curvature_operator(const SecondFundamentalForm& sff);

// Rotate the normal frame (N1,N2) by phi and re-express the coefficients.
SecondFundamentalForm rotate_normal_gauge(const SecondFundamentalForm& sff, double phi);

StructuralResiduals structural_residuals(const Surface& surface, double u, double v,
                                         const TolerancePolicy& policy);

}  // namespace meridian

#endif
