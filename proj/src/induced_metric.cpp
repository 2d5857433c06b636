#include "ask/induced_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ask/errors.hpp"

namespace ask {

void InducedMetricQuery::validate() const {
  if (!(lambda > 0.0)) throw config_error("InducedMetricQuery: lambda must be positive");
  if (!(abs_tol > 0.0)) throw config_error("InducedMetricQuery: abs_tol must be positive");
  if (!(bracket_growth > 1.0)) throw config_error("InducedMetricQuery: bracket_growth must be > 1");
  if (max_doublings < 1) throw config_error("InducedMetricQuery: max_doublings must be >= 1");
}

double induced_metric(const ActionCost& a, const InducedMetricQuery& q, const Point& u,
                      const Point& v) {
  q.validate();
  if (u == v) return 0.0;

  const auto g = [&](double s) { return evaluate(a, s / q.lambda, u, v) - s; };

  // bracket: g(0+) > 0 off the diagonal; double until g(hi) <= 0
  double hi = q.lambda;
  if (g(hi) > 0.0) {
    int doublings = 0;
    double next = hi * q.bracket_growth;
    while (g(next) > 0.0) {
      hi = next;
      next *= q.bracket_growth;
      if (++doublings >= q.max_doublings) {
        throw numeric_error("induced_metric: no bracket within " +
                            std::to_string(q.max_doublings) +
                            " doublings (growth pathology?)");
      }
    }
    double lo = hi;
    hi = next;
    while (hi - lo > q.abs_tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // bracket reached ulp resolution
      (g(mid) <= 0.0 ? hi : lo) = mid;
    }
    return hi;
  }
  // crossing below the initial guess
  double lo = 0.0;
  while (hi - lo > q.abs_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) <= 0.0 ? hi : lo) = mid;
  }
  return hi;
}

MetricBounds induced_metric_bounds(const ActionCost& a, double lambda, const Point& u,
                                   const Point& v, const std::vector<double>& tau_grid) {
  if (tau_grid.empty()) throw config_error("induced_metric_bounds: empty tau grid");
  if (!(lambda > 0.0)) throw config_error("induced_metric_bounds: lambda must be positive");
  MetricBounds b;
  b.lower = 0.0;
  b.upper = std::numeric_limits<double>::infinity();
  for (double tau : tau_grid) {
    const double val = evaluate(a, tau, u, v);
    b.lower = std::max(b.lower, std::min(val, lambda * tau));
    b.upper = std::min(b.upper, std::max(val, lambda * tau));
  }
  return b;
}

bool neighborhood_contains(const ActionCost& a, const Point& u, const Point& v,
                           const Entourage& e) {
  if (!(e.tau > 0.0) || !(e.c > 0.0)) throw config_error("Entourage: tau and c must be positive");
  return evaluate(a, e.tau, u, v) < e.c;
}

CauchyReport cauchy_diagnostic(const ActionCost& a, const std::vector<Point>& seq,
                               const std::vector<double>& tau_grid, int tail, double tol) {
  if (tail < 2) throw config_error("cauchy_diagnostic: tail must be >= 2");
  if (seq.size() <= static_cast<std::size_t>(tail)) {
    throw config_error("cauchy_diagnostic: sequence shorter than tail");
  }
  if (tau_grid.empty()) throw config_error("cauchy_diagnostic: empty tau grid");
  CauchyReport rep;
  rep.tail = tail;
  rep.tol = tol;
  rep.cauchy_at_tolerance = true;
  const std::size_t start = seq.size() - static_cast<std::size_t>(tail);
  for (double tau : tau_grid) {
    double worst = 0.0;
    for (std::size_t m = start; m < seq.size(); ++m) {
      for (std::size_t n = m + 1; n < seq.size(); ++n) {
        worst = std::max(worst, evaluate(a, tau, seq[m], seq[n]));
      }
    }
    rep.rows.push_back({tau, worst});
    rep.cauchy_at_tolerance = rep.cauchy_at_tolerance && worst < tol;
  }
  return rep;
}

}  // namespace ask
