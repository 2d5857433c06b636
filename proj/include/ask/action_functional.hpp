#pragma once

#include "ask/action_cost.hpp"
#include "ask/curve.hpp"
#include "ask/induced_metric.hpp"

namespace ask {

// sum_j a(t_j - t_{j-1}, u(t_{j-1}), u(t_j)) over the partition
double action_on_partition(const ActionCost& a, const SampledCurve& u, const Partition& p);

struct ActionEstimate {
  double value = 0.0;
  int depth_reached = 0;
  bool converged = false;                   // relative increment fell below rel_tol
  std::vector<double> values_per_depth;     // partition sums, nondecreasing
  std::vector<std::size_t> pieces_per_depth;
};

// Certified lower estimate of the curve action: dyadic midpoint refinement
// of the sample grid produces nested partitions, so the sums are
// nondecreasing by concatenation; stops when the relative increment drops
// below rel_tol or the depth budget is exhausted. Without an analytic
// evaluator the refinement is capped at the sample grid.
ActionEstimate estimate_action(const ActionCost& a, const SampledCurve& u, int max_depth,
                               double rel_tol);

// sum_j d_lambda(u(t_{j-1}), u(t_j)) over the partition
double metric_variation(const ActionCost& a, double lambda, const SampledCurve& u,
                        const Partition& p, const InducedMetricQuery& q = {});

}  // namespace ask
