#include "ask/combinators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "ask/errors.hpp"

namespace ask {

ActionCost from_metric(Metric d, ConvexGauge psi) {
  CostClaims claims;
  claims.symmetric = true;
  claims.continuous = true;
  claims.growth = psi.superlinear() ? Growth::Superlinear : Growth::MetricLike;
  if (psi.is_identity()) {
    auto dm = std::make_shared<Metric>(std::move(d));
    return ActionCost(
        [dm](double, const Point& u, const Point& v) { return distance(*dm, u, v); },
        claims, "metric");
  }
  auto dm = std::make_shared<Metric>(std::move(d));
  auto g = std::make_shared<ConvexGauge>(std::move(psi));
  return ActionCost(
      [dm, g](double tau, const Point& u, const Point& v) {
        const double r = distance(*dm, u, v);
        return r == 0.0 ? 0.0 : tau * (*g)(r / tau);
      },
      claims, "from_metric");
}

ActionCost convex_transform(ActionCost b, ConvexGauge psi) {
  if (psi.is_identity()) return b;
  CostClaims claims;
  claims.symmetric = b.claims().symmetric;
  claims.continuous = b.claims().continuous;
  if (psi.superlinear()) {
    claims.growth = Growth::Superlinear;
  } else {
    claims.growth = b.claims().growth == Growth::MetricLike ? Growth::MetricLike : Growth::Unknown;
  }
  auto base = std::make_shared<ActionCost>(std::move(b));
  auto g = std::make_shared<ConvexGauge>(std::move(psi));
  return ActionCost(
      [base, g](double tau, const Point& u, const Point& v) {
        const double r = (*base)(tau, u, v);
        return r == 0.0 ? 0.0 : tau * (*g)(r / tau);
      },
      claims, "convex_transform(" + base->label() + ")");
}

ActionCost rescale(ActionCost b, double lambda, double theta) {
  if (!(lambda > 0.0) || !(theta > 0.0)) {
    throw config_error("rescale: lambda and theta must be positive");
  }
  auto base = std::make_shared<ActionCost>(std::move(b));
  const CostClaims claims = base->claims();
  return ActionCost(
      [base, lambda, theta](double tau, const Point& u, const Point& v) {
        return theta * (*base)(tau / lambda, u, v);
      },
      claims, "rescale(" + base->label() + ")");
}

ActionCost linear_combination(std::vector<std::pair<double, ActionCost>> terms) {
  if (terms.empty()) throw config_error("linear_combination: empty term list");
  CostClaims claims;
  claims.symmetric = true;
  claims.continuous = true;
  bool any_superlinear = false, all_metric_like = true;
  for (const auto& [theta, a] : terms) {
    if (!(theta > 0.0)) throw config_error("linear_combination: coefficients must be positive");
    claims.symmetric = claims.symmetric && a.claims().symmetric;
    claims.continuous = claims.continuous && a.claims().continuous;
    any_superlinear = any_superlinear || a.claims().growth == Growth::Superlinear;
    all_metric_like = all_metric_like && a.claims().growth == Growth::MetricLike;
  }
  claims.growth = any_superlinear ? Growth::Superlinear
                                  : (all_metric_like ? Growth::MetricLike : Growth::Unknown);
  auto shared = std::make_shared<std::vector<std::pair<double, ActionCost>>>(std::move(terms));
  return ActionCost(
      [shared](double tau, const Point& u, const Point& v) {
        double s = 0.0;
        for (const auto& [theta, a] : *shared) s += theta * a(tau, u, v);
        return s;
      },
      claims, "linear_combination");
}

ConcaveCombiner ConcaveCombiner::power(double q) {
  if (!(q > 0.0 && q <= 1.0)) throw config_error("ConcaveCombiner: power exponent must be in (0,1]");
  return ConcaveCombiner(
      1, [q](double, std::span<const double> a) { return std::pow(a[0], q); }, "power");
}

ConcaveCombiner ConcaveCombiner::truncate(double lambda) {
  if (!(lambda > 0.0)) throw config_error("ConcaveCombiner: truncation level must be positive");
  return ConcaveCombiner(
      1, [lambda](double tau, std::span<const double> a) { return std::min(a[0], lambda * tau); },
      "truncate");
}

ConcaveCombiner ConcaveCombiner::custom(std::size_t arity, Fn fn, std::string label) {
  if (arity == 0) throw config_error("ConcaveCombiner: arity must be positive");
  return ConcaveCombiner(arity, std::move(fn), std::move(label));
}

ActionCost concave_compose(ConcaveCombiner h, std::vector<ActionCost> costs) {
  if (h.arity() != costs.size()) {
    throw config_error("concave_compose: combiner arity " + std::to_string(h.arity()) +
                       " does not match " + std::to_string(costs.size()) + " costs");
  }
  CostClaims claims;
  claims.symmetric = std::all_of(costs.begin(), costs.end(),
                                 [](const ActionCost& a) { return a.claims().symmetric; });
  claims.continuous = std::all_of(costs.begin(), costs.end(),
                                  [](const ActionCost& a) { return a.claims().continuous; });
  claims.growth = Growth::Unknown;
  auto hc = std::make_shared<ConcaveCombiner>(std::move(h));
  auto cs = std::make_shared<std::vector<ActionCost>>(std::move(costs));
  return ActionCost(
      [hc, cs](double tau, const Point& u, const Point& v) {
        std::vector<double> vals(cs->size());
        for (std::size_t i = 0; i < cs->size(); ++i) vals[i] = (*cs)[i](tau, u, v);
        return (*hc)(tau, vals);
      },
      claims, "concave_compose(" + hc->label() + ")");
}

MetricFamily::MetricFamily(std::vector<double> lambdas, std::vector<Metric> metrics,
                           std::uint64_t check_seed, int check_samples)
    : lambdas_(std::move(lambdas)), metrics_(std::move(metrics)) {
  if (lambdas_.empty()) throw config_error("MetricFamily: empty grid");
  if (lambdas_.size() != metrics_.size()) {
    throw config_error("MetricFamily: grid and metric counts differ");
  }
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (!(lambdas_[i] > 0.0)) throw config_error("MetricFamily: lambdas must be positive");
    if (i > 0 && !(lambdas_[i] > lambdas_[i - 1])) {
      throw config_error("MetricFamily: lambda grid must be strictly increasing");
    }
  }
  // pointwise monotonicity in lambda
  for (std::size_t i = 1; i < metrics_.size(); ++i) {
    const Metric& lo = metrics_[i - 1];
    const Metric& hi = metrics_[i];
    if (lo.is_table() != hi.is_table()) {
      throw config_error("MetricFamily: mixed metric backends");
    }
    if (lo.is_table()) {
      if (lo.table_size() != hi.table_size()) throw config_error("MetricFamily: table size mismatch");
      const std::size_t n = lo.table_size();
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (lo.table_at(r, c) > hi.table_at(r, c)) {
            throw config_error("MetricFamily: family is not pointwise increasing in lambda");
          }
        }
      }
    } else {
      std::mt19937_64 rng(check_seed + i);
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (int s = 0; s < check_samples; ++s) {
        std::vector<double> a(3), b(3);
        for (auto& x : a) x = gauss(rng);
        for (auto& x : b) x = gauss(rng);
        const Point u = Point::euclidean(a), v = Point::euclidean(b);
        if (distance(lo, u, v) > distance(hi, u, v) * (1.0 + 1e-12)) {
          throw config_error("MetricFamily: family is not pointwise increasing in lambda");
        }
      }
    }
  }
}

ActionCost truncated_metric_sup(MetricFamily family) {
  CostClaims claims;
  claims.symmetric = true;
  claims.continuous = true;  // piecewise linear in tau
  claims.growth = Growth::MetricLike;
  auto fam = std::make_shared<MetricFamily>(std::move(family));
  return ActionCost(
      [fam](double tau, const Point& u, const Point& v) {
        double best = 0.0;
        for (std::size_t i = 0; i < fam->size(); ++i) {
          best = std::max(best, std::min(distance(fam->metric(i), u, v), fam->lambda(i) * tau));
        }
        return best;
      },
      claims, "truncated_metric_sup");
}

}  // namespace ask
