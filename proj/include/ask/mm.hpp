#pragma once

#include <functional>
#include <vector>

#include "ask/action_cost.hpp"
#include "ask/energy.hpp"
#include "ask/minimize.hpp"

namespace ask {

struct MMOptions {
  DescentOptions descent;
  // post-descent derivative-free polish; handles kinks of nonsmooth costs
  // (rate-independent gauges) at negligible extra cost
  CompassOptions polish{0.25, 0.5, 1e-12, 400};
  bool label_local = true;  // Euclidean minimizers are local unless exhaustive
};

// One minimizing-movement step: argmin_V a(tau, U_prev, V) + E(n*tau, V).
// Finite spaces are enumerated (true argmin); Euclidean spaces run descent
// warm-started at U_prev, whose objective value E(n*tau, U_prev) also upper
// bounds the result.
Point mm_step(const ActionCost& a, const Energy& E, double tau, int n, const Point& u_prev,
              const MMOptions& opts = {});

// Discrete trajectory with its piecewise-constant interpolant
// t -> U^n on ((n-1)*tau, n*tau].
struct MMTrajectory {
  double tau = 0.0;
  double horizon = 0.0;
  std::vector<Point> values;      // U^0 .. U^{N_tau}
  std::vector<double> energies;   // E(n*tau, U^n)
  std::vector<double> step_costs; // a(tau, U^{n-1}, U^n), size N_tau
  bool local_minimizers = false;  // descent-based steps may be local argmins

  std::size_t steps() const { return step_costs.size(); }
  double total_cost() const;
  Point interpolant(double t) const;
};

// Runs mm_step for n = 1..N_tau with N_tau = ceil(T/tau).
MMTrajectory mm_solve(const ActionCost& a, const Energy& E, double tau, double T,
                      const Point& u0, const MMOptions& opts = {});

struct ConvergenceRow {
  double tau = 0.0;
  double error = 0.0;           // sup-norm error at the shared grid times
  double observed_order = 0.0;  // vs the previous row; 0 for the first
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  double fitted_order = 0.0;  // least-squares slope of log(error) vs log(tau)
};

// Compares interpolants against a reference trajectory at the shared grid
// times k * max(tau_list). The reference is an analytic solution; pass the
// finest-tau interpolant for self-convergence.
ConvergenceStudy mm_convergence_study(const ActionCost& a, const Energy& E, const Point& u0,
                                      double T, std::vector<double> tau_list,
                                      const std::function<Point(double)>& reference,
                                      const MMOptions& opts = {});

}  // namespace ask
