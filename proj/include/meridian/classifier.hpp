#ifndef MERIDIAN_CLASSIFIER_HPP
#define MERIDIAN_CLASSIFIER_HPP

#include <vector>

#include "meridian/semiparallel.hpp"

namespace meridian {

enum class MeridianCase { I, II, III, Degenerate };
enum class TheoremBranch { CaseI, CaseII, NotSemiParallel, Inconsistent };

struct GridSpec {
  double u_min = 0, u_max = 1;
  int u_count = 2;
  double v_min = 0, v_max = 1;
  int v_count = 2;

  void validate() const;
  std::vector<double> u_samples() const;
  std::vector<double> v_samples() const;
};

struct ClassificationResult {
  MeridianCase surface_case = MeridianCase::Degenerate;
  bool kappa_is_zero = false;
  bool kappa_alpha_is_zero = false;
  bool kappa_constant = false;
  TheoremBranch theorem2_branch = TheoremBranch::NotSemiParallel;
  double ode_residual_max = 0;
  double semiparallel_residual_max = 0;
  // Diagnostics for the "planar surface" reading: rank of the ambient span of
  // the second derivatives' normal components, and whether the sampled points
  // fit a hyperplane of E^4.
  int normal_span_rank = 0;
  bool hyperplanar = false;
  double K_min = 0, K_max = 0;
};

const char* to_string(MeridianCase c);
const char* to_string(TheoremBranch b);

// Samples kappa, kappa_alpha and g'/f over the grid, assigns the taxonomy
// case, derives the theorem branch from the measured quantities, and
// cross-checks it against the pointwise semi-parallel verdicts.
ClassificationResult classify_meridian(const Surface& surface, const GridSpec& grid,
                                       const TolerancePolicy& policy);

// max over uniform samples of |f f'' - f'^2 + 1| (the displayed profile ODE).
double ode_residual(const Profile& profile, double u_min, double u_max, int samples);

}  // namespace meridian

#endif
