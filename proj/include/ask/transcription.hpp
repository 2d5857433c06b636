#pragma once

#include "ask/action_cost.hpp"
#include "ask/integrand.hpp"
#include "ask/minimize.hpp"

namespace ask {

// Discrete curve used by the direct transcription: M segments, knots
// pinned to the endpoints, midpoint quadrature with forward-difference
// velocities.
struct Transcription {
  int segments = 1;
  double tau = 1.0;
  std::vector<Point> knots;  // size segments + 1
};

struct TranscriptionResult {
  double value = 0.0;
  Transcription path;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Minimizes sum_i dt * R(midpoint_i, (k_{i+1}-k_i)/dt) over the interior
// knots, descent from the straight-line initialization. Upper estimate of
// the action-integral cost, converging as M grows for convex R.
TranscriptionResult action_integral_cost(const Integrand& R, double tau, const Point& u,
                                         const Point& v, int segments,
                                         const DescentOptions& opts = {});

// Wraps the transcription as an ActionCost (continuous, superlinear).
ActionCost wrap_as_action_cost(Integrand R, int segments, const DescentOptions& opts = {});

}  // namespace ask
