#pragma once

#include <optional>

#include "ask/action_cost.hpp"
#include "ask/curve.hpp"
#include "ask/minimize.hpp"

namespace ask {

// Slack budget for the dyadic construction: level n inserts 2^n midpoints,
// each allowed slack eta_n = eta * 4^{-n} / 2, so that sum_n 2^n * eta_n = eta.
struct GeodesicBudget {
  double eta = 1e-3;
  int depth = 6;

  double level_slack(int n) const;
  void validate() const;
};

struct MidpointSearch {
  CompassOptions compass;  // Euclidean search: compass descent from (u+v)/2
};

struct MidpointResult {
  Point w;
  double leg_sum = 0.0;   // a(rho/2,u,w) + a(rho/2,w,v)
  double base = 0.0;      // a(rho,u,v)
  double excess = 0.0;    // leg_sum - base
  bool found = false;     // excess <= eps
};

// Searches for an approximate midpoint: w with
//   a(rho/2,u,w) + a(rho/2,w,v) <= a(rho,u,v) + eps.
// Euclidean points use derivative-free compass descent started at the
// arithmetic midpoint; finite spaces are searched exhaustively. A failed
// search still carries the best w and its excess.
MidpointResult find_midpoint(const ActionCost& a, double rho, const Point& u, const Point& v,
                             double eps, const MidpointSearch& search = {});

struct DyadicGeodesic {
  SampledCurve curve;
  std::vector<double> level_action_sums;  // partition action after each level
  double base_cost = 0.0;                 // a(tau, u0, u1)
};

// Recursive midpoint insertion on the dyadic grid of [0,tau]: level n
// splits each of the 2^n segments with per-pair slack eta_n, so the final
// partition action stays within eta of a(tau,u0,u1). A failed midpoint
// search aborts with numeric_error naming the level.
DyadicGeodesic dyadic_geodesic(const ActionCost& a, double tau, const Point& u0, const Point& u1,
                               const GeodesicBudget& budget, const MidpointSearch& search = {});

// action over the curve's full grid minus a(tau,u0,u1); endpoint mismatch
// is an error
double geodesic_action_gap(const ActionCost& a, double tau, const Point& u0, const Point& u1,
                           const SampledCurve& omega);

}  // namespace ask
