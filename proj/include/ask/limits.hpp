#pragma once

#include "ask/action_cost.hpp"

namespace ask {

// Geometric evaluation schedule tau_k = tau0 * factor^k used by all
// one-sided-limit style probes.
struct LimitSchedule {
  double tau0 = 1e-2;
  double factor = 0.5;  // in (0,1)
  int max_steps = 60;
  double rel_tol = 1e-9;

  void validate() const;
  double offset(int k) const;
};

struct LimitResult {
  double value = 0.0;     // last evaluation (the stabilized value when converged)
  double previous = 0.0;  // evaluation before last
  int steps = 0;
  bool converged = false;
};

enum class LimitSide { Plus, Minus };

// Probes the one-sided limits of tau -> a(tau,u,v). Minus approaches tau
// from above (limit from the right, a lower value for a monotone cost),
// Plus from below. The cost is non-increasing in tau, so successive
// evaluations are monotone and stabilization is well defined; a
// non-converged result carries the last two evaluations.
LimitResult one_sided_limit(const ActionCost& a, LimitSide side, double tau,
                            const Point& u, const Point& v, const LimitSchedule& sched);

enum class GrowthKind { MetricLike, Diverging };

struct GrowthEstimate {
  GrowthKind kind = GrowthKind::MetricLike;
  double value = 0.0;  // estimate of sup_tau a(tau,u,v) when MetricLike
  int steps = 0;
  bool converged = false;
};

// Follows a(tau_k, u, v) along tau_k = tau0 * factor^k down to 0. The values
// increase monotonically; stabilization below `cap` classifies the pair as
// metric-like, exceeding `cap` as diverging. u == v is rejected (the limit
// is trivially zero there).
GrowthEstimate classify_growth(const ActionCost& a, const Point& u, const Point& v,
                               const LimitSchedule& sched, double cap);

}  // namespace ask
