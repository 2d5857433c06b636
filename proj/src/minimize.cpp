#include "ask/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "ask/errors.hpp"

namespace ask {

namespace {
double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}
}  // namespace

DescentResult minimize_descent(const Objective& f, const GradientFn& grad,
                               std::vector<double> x0, const DescentOptions& opts) {
  DescentResult res;
  res.x = std::move(x0);
  res.value = f(res.x);
  if (!std::isfinite(res.value)) throw numeric_error("minimize_descent: non-finite objective");

  std::vector<double> g = grad(res.x);
  std::vector<double> x_prev, g_prev, trial(res.x.size());
  std::deque<double> window{res.value};
  double step = 1.0;

  for (int it = 0; it < opts.max_iters; ++it) {
    res.iterations = it;
    res.grad_norm = norm2(g);
    if (res.grad_norm <= opts.grad_tol) {
      res.converged = true;
      return res;
    }
    const double fref =
        opts.bb_step ? *std::max_element(window.begin(), window.end()) : res.value;
    double alpha = std::clamp(step, 1e-14, 1e14);
    bool accepted = false;
    for (int bt = 0; bt < opts.max_backtracks; ++bt) {
      for (std::size_t i = 0; i < res.x.size(); ++i) trial[i] = res.x[i] - alpha * g[i];
      const double ft = f(trial);
      if (ft < opts.divergence_floor) {
        throw numeric_error("minimize_descent: objective unbounded below");
      }
      if (std::isfinite(ft) &&
          ft <= fref - opts.armijo_c * alpha * res.grad_norm * res.grad_norm) {
        x_prev = res.x;
        g_prev = g;
        res.x.swap(trial);
        res.value = ft;
        accepted = true;
        break;
      }
      alpha *= opts.backtrack;
    }
    if (!accepted) {
      // no acceptable step: stationary to working precision
      return res;
    }
    window.push_back(res.value);
    if (static_cast<int>(window.size()) > std::max(1, opts.nonmonotone_window)) {
      window.pop_front();
    }
    g = grad(res.x);
    if (opts.bb_step) {
      double sy = 0.0, ss = 0.0;
      for (std::size_t i = 0; i < res.x.size(); ++i) {
        const double s = res.x[i] - x_prev[i];
        const double y = g[i] - g_prev[i];
        sy += s * y;
        ss += s * s;
      }
      step = (sy > 1e-300) ? ss / sy : alpha * 2.0;
    } else {
      step = alpha * 2.0;  // mild growth so accepted steps can re-lengthen
    }
  }
  res.iterations = opts.max_iters;
  res.grad_norm = norm2(grad(res.x));
  res.converged = res.grad_norm <= opts.grad_tol;
  return res;
}

GradientFn finite_difference_gradient(const Objective& f) {
  return [f](const std::vector<double>& x) {
    std::vector<double> g(x.size());
    std::vector<double> xp = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double h = 1e-6 * (1.0 + std::abs(x[i]));
      const double orig = xp[i];
      xp[i] = orig + h;
      const double fp = f(xp);
      xp[i] = orig - h;
      const double fm = f(xp);
      xp[i] = orig;
      g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
  };
}

CompassResult compass_search(const Objective& f, std::vector<double> x0,
                             const CompassOptions& opts) {
  CompassResult res;
  res.x = std::move(x0);
  res.value = f(res.x);
  res.evals = 1;
  double step = opts.init_step;
  std::vector<double> trial = res.x;
  while (res.evals < opts.max_evals && step > opts.min_step) {
    bool improved = false;
    for (std::size_t i = 0; i < res.x.size() && res.evals < opts.max_evals; ++i) {
      for (double sgn : {+1.0, -1.0}) {
        trial[i] = res.x[i] + sgn * step;
        const double ft = f(trial);
        ++res.evals;
        if (ft < res.value) {
          res.value = ft;
          res.x[i] = trial[i];
          improved = true;
          break;
        }
        if (res.evals >= opts.max_evals) break;
      }
      trial[i] = res.x[i];
    }
    if (!improved) step *= opts.shrink;
  }
  return res;
}

}  // namespace ask
