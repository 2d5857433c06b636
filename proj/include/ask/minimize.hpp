#pragma once

#include <functional>
#include <vector>

namespace ask {

using Objective = std::function<double(const std::vector<double>&)>;
using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct DescentOptions {
  int max_iters = 10000;
  double grad_tol = 1e-8;
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  int max_backtracks = 60;
  // Barzilai-Borwein trial step for the next gradient step; plain descent
  // stalls on the ill-conditioned transcription Hessians long before the
  // iteration budget runs out
  bool bb_step = true;
  int nonmonotone_window = 10;
  double divergence_floor = -1e100;  // objective below this aborts
};

struct DescentResult {
  std::vector<double> x;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;  // gradient norm reached grad_tol
};

// Gradient descent with Armijo backtracking. Direction is always the
// negative gradient; the trial step is BB-initialized (with a bounded
// nonmonotone reference) unless bb_step is off.
DescentResult minimize_descent(const Objective& f, const GradientFn& grad,
                               std::vector<double> x0, const DescentOptions& opts = {});

// central differences, h = 1e-6 * (1 + |x_i|)
GradientFn finite_difference_gradient(const Objective& f);

struct CompassOptions {
  double init_step = 0.25;
  double shrink = 0.5;
  double min_step = 1e-12;
  int max_evals = 200;
};

struct CompassResult {
  std::vector<double> x;
  double value = 0.0;
  int evals = 0;
};

// Derivative-free local descent: axis moves with a shrinking step. Used
// where costs may be nonsmooth (linear gauges, truncations).
CompassResult compass_search(const Objective& f, std::vector<double> x0,
                             const CompassOptions& opts = {});

}  // namespace ask
