#ifndef MERIDIAN_SEMIPARALLEL_HPP
#define MERIDIAN_SEMIPARALLEL_HPP

#include "meridian/invariants.hpp"

namespace meridian {

// Components of (Rbar(X1,X2) . h)(X_k, X_l) on (N1, N2);
// kl index 0 = (1,1), 1 = (1,2), 2 = (2,2).
struct SemiParallelTensor {
  double S[3][2] = {{0, 0}, {0, 0}, {0, 0}};
  // max over (k,l) of the length of the normal vector S[kl]; invariant under
  // rotations of the normal frame.
  double residual_norm = 0;

  void finish() {
    residual_norm = 0;
    for (auto& row : S)
      residual_norm = std::max(residual_norm, std::hypot(row[0], row[1]));
  }
};

struct Verdict {
  bool semi_parallel = false;
  double residual_norm = 0;
  double tol_used = 0;
};

// Component formulas obtained by substituting the normal-curvature expansion
// and R(X1,X2)X_i = -+ K X_j into the defining product.
SemiParallelTensor rbar_h_formula(const SecondFundamentalForm& sff, double K);

// Direct route: Rperp applied to h(X_k,X_l) minus h contracted with the
// tangent curvature action. Independent code path from rbar_h_formula.
SemiParallelTensor rbar_h_direct(const SecondFundamentalForm& sff, double K);

// Evaluates both routes, enforces their agreement, and gates the residual at
// the tolerance matching the surface's jet kind.
Verdict semiparallel_verdict(const Surface& surface, double u, double v,
                             const TolerancePolicy& policy);

SemiParallelTensor semiparallel_tensor(const Surface& surface, double u, double v,
                                       const TolerancePolicy& policy);

}  // namespace meridian

#endif
