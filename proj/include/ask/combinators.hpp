#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ask/action_cost.hpp"
#include "ask/gauge.hpp"
#include "ask/metric.hpp"

namespace ask {

// a(tau,u,v) = tau * psi(d(u,v)/tau). Continuous; superlinear growth exactly
// when psi has infinite recession slope. The identity gauge short-circuits to
// the bare metric, which is also what keeps evaluations bit-exact there.
ActionCost from_metric(Metric d, ConvexGauge psi);

// a(tau,u,v) = tau * psi(b(tau,u,v)/tau). With the identity gauge this IS b.
ActionCost convex_transform(ActionCost b, ConvexGauge psi);

// a(tau,u,v) = theta * b(tau/lambda, u, v)
ActionCost rescale(ActionCost b, double lambda, double theta);

// a = sum_i theta_i * a_i, theta_i > 0
ActionCost linear_combination(std::vector<std::pair<double, ActionCost>> terms);

// Concave combiner h(tau, a_1..a_I): concave, h(tau,0)=0, h(tau,a)>0 for
// a != 0, monotone in each a_i.
class ConcaveCombiner {
 public:
  using Fn = std::function<double(double, std::span<const double>)>;

  // a^q with q in (0,1]; q=0.5 is the square root
  static ConcaveCombiner power(double q);
  // min(a, lambda*tau). Caution: the time branch of the truncation breaks
  // the concatenation inequality whenever it binds (see the constructor
  // tests); the composition is only a genuine action cost on domains where
  // the metric branch is active.
  static ConcaveCombiner truncate(double lambda);
  static ConcaveCombiner custom(std::size_t arity, Fn fn, std::string label = "custom");

  std::size_t arity() const { return arity_; }
  double operator()(double tau, std::span<const double> a) const { return fn_(tau, a); }
  const std::string& label() const { return label_; }

 private:
  ConcaveCombiner(std::size_t arity, Fn fn, std::string label)
      : arity_(arity), fn_(std::move(fn)), label_(std::move(label)) {}
  std::size_t arity_;
  Fn fn_;
  std::string label_;
};

ActionCost concave_compose(ConcaveCombiner h, std::vector<ActionCost> costs);

// Family of metrics d_lambda on a lambda-grid, pointwise increasing in
// lambda. Monotonicity is verified at construction: exhaustively for table
// metrics, on seeded sample pairs for norm metrics.
class MetricFamily {
 public:
  MetricFamily(std::vector<double> lambdas, std::vector<Metric> metrics,
               std::uint64_t check_seed = 17, int check_samples = 256);

  std::size_t size() const { return lambdas_.size(); }
  double lambda(std::size_t i) const { return lambdas_[i]; }
  const Metric& metric(std::size_t i) const { return metrics_[i]; }

 private:
  std::vector<double> lambdas_;
  std::vector<Metric> metrics_;
};

// a(tau,u,v) = max over the grid of min(d_lambda(u,v), lambda*tau)
ActionCost truncated_metric_sup(MetricFamily family);

}  // namespace ask
