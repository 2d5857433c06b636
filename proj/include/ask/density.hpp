#pragma once

#include <vector>

#include "ask/action_functional.hpp"
#include "ask/curve.hpp"
#include "ask/limits.hpp"

namespace ask {

struct DensityPoint {
  double t = 0.0;
  double value = 0.0;
  bool converged = false;
};

struct DensityProfile {
  std::vector<DensityPoint> grid;
  LimitSchedule schedule;

  std::size_t converged_count() const;
  // piecewise-linear integral over the converged nodes
  double integral(double s, double t) const;
};

// Symmetric difference-quotient estimator of the action density at an
// interior time t:
//   Upsilon(h) = [a(h, u(t-h), u(t)) + a(h, u(t), u(t+h))] / (2h)
// followed along the schedule until successive values stabilize. Endpoint
// times fall back to the one-sided quotient. A non-converged result carries
// the last two values.
LimitResult action_density(const ActionCost& a, const SampledCurve& u, double t,
                           const LimitSchedule& sched);

struct ConsistencyReport {
  DensityProfile profile;
  double integral = 0.0;         // trapezoidal integral of the density
  double action_estimate = 0.0;  // dyadic-refinement estimate of the action
  double gap = 0.0;              // |integral - action_estimate|
};

// Estimates the density on a uniform grid (endpoints included, one-sided
// there), integrates it and compares against estimate_action. Throws
// numeric_error when more than 20% of the grid fails to converge.
ConsistencyReport density_profile_and_consistency(const ActionCost& a, const SampledCurve& u,
                                                  int grid_n, const LimitSchedule& sched,
                                                  int action_depth = 12,
                                                  double action_rel_tol = 1e-9);

struct AbsoluteContinuityReport {
  double worst_excess = 0.0;        // a(t-s,u(s),u(t)) - integral(s,t), clamped at 0
  double worst_excess_s = 0.0;
  double worst_excess_t = 0.0;
  double worst_minimality = 0.0;    // density(t) - g(t), clamped at 0
  double worst_minimality_t = 0.0;
  std::size_t pairs_checked = 0;
  bool pass = false;
};

// Verifies the defining inequality a(t-s, u(s), u(t)) <= int_s^t g + tol on
// seeded sample pairs, plus the pointwise minimality of the curve's own
// density against g where both are defined.
AbsoluteContinuityReport check_absolute_continuity(const ActionCost& a, const SampledCurve& u,
                                                   const DensityProfile& g, int sample_pairs,
                                                   double tol, std::uint64_t seed = 0);

}  // namespace ask
