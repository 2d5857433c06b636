#pragma once

#include <vector>

#include "ask/action_cost.hpp"

namespace ask {

// Parameters for the d_lambda computation: bisection tolerance and the
// doubling policy used to bracket the crossing.
struct InducedMetricQuery {
  double lambda = 1.0;
  double abs_tol = 1e-10;
  double bracket_growth = 2.0;
  int max_doublings = 80;

  void validate() const;
};

// d_lambda(u,v) = inf{ s >= 0 : a(s/lambda, u, v) <= s }, located as the
// crossing of the strictly decreasing map s -> a(s/lambda,u,v) - s: an
// upward-doubling bracket starting from s = lambda, then bisection. The
// returned value s satisfies a(s/lambda,u,v) <= s and is within abs_tol of
// the crossing. Failure to bracket within max_doublings signals a growth
// pathology and throws numeric_error.
double induced_metric(const ActionCost& a, const InducedMetricQuery& q, const Point& u,
                      const Point& v);

struct MetricBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Grid relaxations of the variational formulas:
//   max_tau min(a(tau,u,v), lambda*tau) <= d_lambda <= min_tau max(a(tau,u,v), lambda*tau).
// For discontinuous costs these bounds are the authoritative certificate;
// bisection alone cannot distinguish the one-sided limits.
MetricBounds induced_metric_bounds(const ActionCost& a, double lambda, const Point& u,
                                   const Point& v, const std::vector<double>& tau_grid);

// Basic (tau, c) entourage of the uniform structure.
struct Entourage {
  double tau = 1.0;
  double c = 1.0;
};

// true iff a(e.tau, u, v) < e.c
bool neighborhood_contains(const ActionCost& a, const Point& u, const Point& v,
                           const Entourage& e);

struct CauchyRow {
  double tau = 0.0;
  double max_cost = 0.0;  // max a(tau, u_m, u_n) over the tail pairs
};

struct CauchyReport {
  std::vector<CauchyRow> rows;
  int tail = 0;
  double tol = 0.0;
  bool cauchy_at_tolerance = false;
};

// For each tau in the grid, the largest pairwise cost among the last `tail`
// sequence elements; the sequence is flagged Cauchy-at-tolerance when every
// row stays below tol.
CauchyReport cauchy_diagnostic(const ActionCost& a, const std::vector<Point>& seq,
                               const std::vector<double>& tau_grid, int tail, double tol);

}  // namespace ask
