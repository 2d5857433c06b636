#include "ask/limits.hpp"

#include <cmath>
#include <stdexcept>

#include "ask/errors.hpp"

namespace ask {

void LimitSchedule::validate() const {
  if (!(tau0 > 0.0)) throw config_error("LimitSchedule: tau0 must be positive");
  if (!(factor > 0.0 && factor < 1.0)) throw config_error("LimitSchedule: factor must be in (0,1)");
  if (max_steps < 2) throw config_error("LimitSchedule: max_steps must be >= 2");
  if (!(rel_tol > 0.0)) throw config_error("LimitSchedule: rel_tol must be positive");
}

double LimitSchedule::offset(int k) const { return tau0 * std::pow(factor, k); }

static bool stabilized(double current, double previous, double rel_tol) {
  return std::abs(current - previous) <= rel_tol * std::max(1.0, std::abs(current));
}

LimitResult one_sided_limit(const ActionCost& a, LimitSide side, double tau,
                            const Point& u, const Point& v, const LimitSchedule& sched) {
  sched.validate();
  if (!(tau > 0.0)) throw std::domain_error("one_sided_limit: tau must be positive");
  if (side == LimitSide::Plus && !(sched.tau0 < tau)) {
    throw config_error("one_sided_limit: Plus side needs tau0 < tau");
  }
  double prev = 0.0, last = 0.0;
  for (int k = 0; k < sched.max_steps; ++k) {
    const double t = (side == LimitSide::Minus) ? tau + sched.offset(k) : tau - sched.offset(k);
    const double val = evaluate(a, t, u, v);
    if (k > 0 && stabilized(val, last, sched.rel_tol)) {
      return LimitResult{val, last, k + 1, true};
    }
    prev = last;
    last = val;
  }
  return LimitResult{last, prev, sched.max_steps, false};
}

GrowthEstimate classify_growth(const ActionCost& a, const Point& u, const Point& v,
                               const LimitSchedule& sched, double cap) {
  sched.validate();
  if (u == v) throw std::invalid_argument("classify_growth: u and v must be distinct");
  if (!(cap > 0.0)) throw config_error("classify_growth: cap must be positive");

  GrowthEstimate est;
  double prev = 0.0;
  for (int k = 0; k < sched.max_steps; ++k) {
    const double val = evaluate(a, sched.offset(k), u, v);
    est.steps = k + 1;
    est.value = val;
    if (val > cap) {
      est.kind = GrowthKind::Diverging;
      est.converged = true;
      return est;
    }
    if (k > 0 && stabilized(val, prev, sched.rel_tol)) {
      est.kind = GrowthKind::MetricLike;
      est.converged = true;
      return est;
    }
    prev = val;
  }
  // schedule exhausted below the cap without stabilizing: still rising
  est.kind = GrowthKind::Diverging;
  est.converged = false;
  return est;
}

}  // namespace ask
