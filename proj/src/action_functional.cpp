#include "ask/action_functional.hpp"

#include <cmath>

#include "ask/errors.hpp"

namespace ask {

double action_on_partition(const ActionCost& a, const SampledCurve& u, const Partition& p) {
  p.validate();
  if (p.times.front() < u.t_begin() || p.times.back() > u.t_end()) {
    throw config_error("action_on_partition: partition leaves the curve interval");
  }
  double sum = 0.0;
  Point prev = u.value_at(p.times.front());
  for (std::size_t j = 1; j < p.times.size(); ++j) {
    Point next = u.value_at(p.times[j]);
    sum += evaluate(a, p.times[j] - p.times[j - 1], prev, next);
    prev = std::move(next);
  }
  return sum;
}

namespace {

// midpoint refinement of a partition; keeps the old nodes so sums are
// monotone under concatenation
Partition refine(const SampledCurve& u, const Partition& p) {
  Partition out;
  out.times.reserve(p.times.size() * 2 - 1);
  for (std::size_t j = 0; j + 1 < p.times.size(); ++j) {
    out.times.push_back(p.times[j]);
    const double mid = 0.5 * (p.times[j] + p.times[j + 1]);
    if (mid > p.times[j] && mid < p.times[j + 1]) {
      if (u.has_evaluator()) {
        out.times.push_back(mid);
      }
    }
  }
  out.times.push_back(p.times.back());
  return out;
}

}  // namespace

ActionEstimate estimate_action(const ActionCost& a, const SampledCurve& u, int max_depth,
                               double rel_tol) {
  if (max_depth < 0) throw config_error("estimate_action: negative depth budget");
  if (!(rel_tol > 0.0)) throw config_error("estimate_action: rel_tol must be positive");

  Partition p{u.times()};
  p.validate();

  ActionEstimate est;
  double prev = action_on_partition(a, u, p);
  est.values_per_depth.push_back(prev);
  est.pieces_per_depth.push_back(p.pieces());
  est.value = prev;
  est.depth_reached = 0;

  if (!u.has_evaluator()) {
    // sample grid is the finest admissible partition
    est.converged = false;
    return est;
  }
  for (int depth = 1; depth <= max_depth; ++depth) {
    p = refine(u, p);
    const double cur = action_on_partition(a, u, p);
    est.values_per_depth.push_back(cur);
    est.pieces_per_depth.push_back(p.pieces());
    est.value = cur;
    est.depth_reached = depth;
    if (std::abs(cur - prev) <= rel_tol * std::max(1.0, std::abs(cur))) {
      est.converged = true;
      return est;
    }
    prev = cur;
  }
  est.converged = false;
  return est;
}

double metric_variation(const ActionCost& a, double lambda, const SampledCurve& u,
                        const Partition& p, const InducedMetricQuery& q_in) {
  p.validate();
  InducedMetricQuery q = q_in;
  q.lambda = lambda;
  double sum = 0.0;
  Point prev = u.value_at(p.times.front());
  for (std::size_t j = 1; j < p.times.size(); ++j) {
    Point next = u.value_at(p.times[j]);
    sum += induced_metric(a, q, prev, next);
    prev = std::move(next);
  }
  return sum;
}

}  // namespace ask
