#include "ask/density.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ask/errors.hpp"

namespace ask {

std::size_t DensityProfile::converged_count() const {
  return static_cast<std::size_t>(
      std::count_if(grid.begin(), grid.end(), [](const DensityPoint& p) { return p.converged; }));
}

double DensityProfile::integral(double s, double t) const {
  if (!(t >= s)) throw config_error("DensityProfile: integral with t < s");
  std::vector<const DensityPoint*> nodes;
  for (const auto& p : grid) {
    if (p.converged) nodes.push_back(&p);
  }
  if (nodes.size() < 2) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double t0 = nodes[i]->t, t1 = nodes[i + 1]->t;
    const double lo = std::max(s, t0), hi = std::min(t, t1);
    if (hi <= lo) continue;
    const double v0 = nodes[i]->value, v1 = nodes[i + 1]->value;
    const auto at = [&](double x) { return v0 + (v1 - v0) * (x - t0) / (t1 - t0); };
    acc += 0.5 * (at(lo) + at(hi)) * (hi - lo);
  }
  return acc;
}

LimitResult action_density(const ActionCost& a, const SampledCurve& u, double t,
                           const LimitSchedule& sched) {
  sched.validate();
  const double lo = u.t_begin(), hi = u.t_end();
  if (t < lo || t > hi) throw config_error("action_density: t outside the curve interval");

  const bool left_ok = t > lo, right_ok = t < hi;
  const double room = std::min(left_ok ? t - lo : hi - lo, right_ok ? hi - t : hi - lo);
  const double h0 = std::min(sched.tau0, 0.5 * room);

  double prev = 0.0, last = 0.0;
  for (int k = 0; k < sched.max_steps; ++k) {
    const double h = h0 * std::pow(sched.factor, k);
    double quotient = 0.0;
    if (left_ok && right_ok) {
      quotient = (evaluate(a, h, u.value_at(t - h), u.value_at(t)) +
                  evaluate(a, h, u.value_at(t), u.value_at(t + h))) /
                 (2.0 * h);
    } else if (right_ok) {
      quotient = evaluate(a, h, u.value_at(t), u.value_at(t + h)) / h;
    } else {
      quotient = evaluate(a, h, u.value_at(t - h), u.value_at(t)) / h;
    }
    if (k > 0 && std::abs(quotient - last) <= sched.rel_tol * std::max(1.0, std::abs(quotient))) {
      return LimitResult{quotient, last, k + 1, true};
    }
    prev = last;
    last = quotient;
  }
  return LimitResult{last, prev, sched.max_steps, false};
}

ConsistencyReport density_profile_and_consistency(const ActionCost& a, const SampledCurve& u,
                                                  int grid_n, const LimitSchedule& sched,
                                                  int action_depth, double action_rel_tol) {
  if (grid_n < 2) throw config_error("density_profile_and_consistency: grid_n must be >= 2");
  ConsistencyReport rep;
  rep.profile.schedule = sched;
  const double a0 = u.t_begin(), b0 = u.t_end();
  for (int i = 0; i <= grid_n; ++i) {
    const double t = (i == grid_n) ? b0 : a0 + (b0 - a0) * static_cast<double>(i) / grid_n;
    const LimitResult r = action_density(a, u, t, sched);
    rep.profile.grid.push_back({t, r.value, r.converged});
  }
  const std::size_t bad = rep.profile.grid.size() - rep.profile.converged_count();
  if (5 * bad > rep.profile.grid.size()) {
    throw numeric_error("density_profile_and_consistency: more than 20% of the grid "
                        "failed to converge");
  }
  rep.integral = rep.profile.integral(a0, b0);
  rep.action_estimate = estimate_action(a, u, action_depth, action_rel_tol).value;
  rep.gap = std::abs(rep.integral - rep.action_estimate);
  return rep;
}

AbsoluteContinuityReport check_absolute_continuity(const ActionCost& a, const SampledCurve& u,
                                                   const DensityProfile& g, int sample_pairs,
                                                   double tol, std::uint64_t seed) {
  if (sample_pairs < 1) throw config_error("check_absolute_continuity: needs at least one pair");
  AbsoluteContinuityReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a0 = u.t_begin(), b0 = u.t_end();
  for (int i = 0; i < sample_pairs; ++i) {
    double s = a0 + (b0 - a0) * unit(rng);
    double t = a0 + (b0 - a0) * unit(rng);
    if (s > t) std::swap(s, t);
    if (t - s < 1e-9 * (b0 - a0)) continue;
    const double lhs = evaluate(a, t - s, u.value_at(s), u.value_at(t));
    const double excess = lhs - g.integral(s, t);
    ++rep.pairs_checked;
    if (excess > rep.worst_excess) {
      rep.worst_excess = excess;
      rep.worst_excess_s = s;
      rep.worst_excess_t = t;
    }
  }
  // minimality: the curve's own density never exceeds an admissible g
  for (const auto& node : g.grid) {
    if (!node.converged) continue;
    const LimitResult own = action_density(a, u, node.t, g.schedule);
    if (!own.converged) continue;
    const double viol = own.value - node.value;
    if (viol > rep.worst_minimality) {
      rep.worst_minimality = viol;
      rep.worst_minimality_t = node.t;
    }
  }
  rep.worst_excess = std::max(0.0, rep.worst_excess);
  rep.worst_minimality = std::max(0.0, rep.worst_minimality);
  rep.pass = rep.worst_excess <= tol && rep.worst_minimality <= tol;
  return rep;
}

}  // namespace ask
