#include "ask/mm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ask/errors.hpp"
#include "ask/metric.hpp"

namespace ask {

Point mm_step(const ActionCost& a, const Energy& E, double tau, int n, const Point& u_prev,
              const MMOptions& opts) {
  if (!(tau > 0.0)) throw std::domain_error("mm_step: tau must be positive");
  if (n < 1) throw config_error("mm_step: step index must be >= 1");
  const double t = n * tau;

  if (u_prev.is_finite()) {
    double best = std::numeric_limits<double>::infinity();
    Point best_v = u_prev;
    for (std::size_t i = 0; i < u_prev.cardinality(); ++i) {
      const Point v = Point::finite(i, u_prev.cardinality());
      const double obj = (v == u_prev ? 0.0 : evaluate(a, tau, u_prev, v)) + E(t, v);
      if (obj < best) {
        best = obj;
        best_v = v;
      }
    }
    return best_v;
  }

  const Objective f = [&](const std::vector<double>& x) {
    const Point v = Point::euclidean(x);
    const double val = (v == u_prev ? 0.0 : evaluate(a, tau, u_prev, v)) + E(t, v);
    if (val < -1e100) throw numeric_error("mm_step: objective diverges (energy unbounded below?)");
    return val;
  };
  const GradientFn grad = finite_difference_gradient(f);

  const double f_stay = E(t, u_prev);  // a(tau,u,u) = 0
  DescentResult dr = minimize_descent(f, grad, u_prev.coords(), opts.descent);

  // compass polish: descent stalls on gauge kinks (e.g. |v-u| at v=u)
  CompassOptions copts = opts.polish;
  copts.init_step = std::max(copts.init_step, 2.0 * std::sqrt(opts.descent.grad_tol));
  const CompassResult cr = compass_search(f, dr.x, copts);

  if (cr.value <= f_stay) return Point::euclidean(cr.x);
  return u_prev;  // argmin property at the candidate U^{n-1}
}

double MMTrajectory::total_cost() const {
  double s = 0.0;
  for (double c : step_costs) s += c;
  return s;
}

Point MMTrajectory::interpolant(double t) const {
  if (t < 0.0 || t > horizon + 1e-12)
    throw config_error("MMTrajectory: interpolant query outside [0,T]");
  if (t <= 0.0) return values.front();
  const auto n = static_cast<std::size_t>(std::ceil(t / tau - 1e-12));
  return values[std::min(n, values.size() - 1)];
}

MMTrajectory mm_solve(const ActionCost& a, const Energy& E, double tau, double T,
                      const Point& u0, const MMOptions& opts) {
  if (!(T > 0.0)) throw config_error("mm_solve: horizon must be positive");
  if (!(tau > 0.0)) throw std::domain_error("mm_solve: tau must be positive");
  const int n_steps = static_cast<int>(std::ceil(T / tau - 1e-12));

  MMTrajectory traj;
  traj.tau = tau;
  traj.horizon = T;
  traj.local_minimizers = u0.is_euclidean() && opts.label_local;
  traj.values.push_back(u0);
  traj.energies.push_back(E(0.0, u0));
  for (int n = 1; n <= n_steps; ++n) {
    Point next = [&]() {
      try {
        return mm_step(a, E, tau, n, traj.values.back(), opts);
      } catch (const numeric_error& e) {
        throw numeric_error("mm_solve: step " + std::to_string(n) + ": " + e.what());
      }
    }();
    traj.step_costs.push_back(next == traj.values.back() ? 0.0
                                                         : evaluate(a, tau, traj.values.back(), next));
    traj.energies.push_back(E(n * tau, next));
    traj.values.push_back(std::move(next));
  }
  return traj;
}

ConvergenceStudy mm_convergence_study(const ActionCost& a, const Energy& E, const Point& u0,
                                      double T, std::vector<double> tau_list,
                                      const std::function<Point(double)>& reference,
                                      const MMOptions& opts) {
  if (tau_list.empty()) throw config_error("mm_convergence_study: empty tau list");
  for (std::size_t i = 1; i < tau_list.size(); ++i) {
    if (!(tau_list[i] < tau_list[i - 1])) {
      throw config_error("mm_convergence_study: tau list must be decreasing");
    }
  }
  const Metric euclid = Metric::euclidean_norm(2.0);
  const double tau_coarse = tau_list.front();

  ConvergenceStudy study;
  for (double tau : tau_list) {
    const MMTrajectory traj = mm_solve(a, E, tau, T, u0, opts);
    double err = 0.0;
    for (int k = 1; k * tau_coarse <= T + 1e-12; ++k) {
      const double t = std::min(k * tau_coarse, T);
      err = std::max(err, distance(euclid, traj.interpolant(t), reference(t)));
    }
    ConvergenceRow row{tau, err, 0.0};
    if (!study.rows.empty() && err > 0.0 && study.rows.back().error > 0.0) {
      row.observed_order =
          std::log(study.rows.back().error / err) / std::log(study.rows.back().tau / tau);
    }
    study.rows.push_back(row);
  }
  // least-squares slope of log(err) against log(tau)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& r : study.rows) {
    if (r.error <= 0.0) continue;
    const double x = std::log(r.tau), y = std::log(r.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m >= 2) study.fitted_order = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return study;
}

}  // namespace ask
