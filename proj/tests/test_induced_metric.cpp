#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ask/combinators.hpp"
#include "ask/errors.hpp"
#include "ask/induced_metric.hpp"
#include "helpers.hpp"

using namespace ask;

namespace {

std::vector<double> geometric_grid(double lo, double hi, int count) {
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) {
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  }
  return g;
}

}  // namespace

TEST_CASE("closed form: quadratic gauge at lambda 1 and 4") {
  const ActionCost a = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const Point u = askt::pt(0.0), v = askt::pt(3.0);
  InducedMetricQuery q;
  q.lambda = 1.0;
  CHECK(induced_metric(a, q, u, v) == doctest::Approx(3.0).epsilon(1e-9));
  q.lambda = 4.0;  // lambda/psi^{-1}(lambda) = 4/2 = 2
  CHECK(induced_metric(a, q, u, v) == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(induced_metric(a, q, u, u) == 0.0);
}

TEST_CASE("bisection certificate: returned s satisfies a(s/lambda) <= s") {
  const ActionCost a = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(3.0));
  InducedMetricQuery q;
  q.lambda = 0.7;
  const Point u = askt::pt(0.2), v = askt::pt(2.9);
  const double s = induced_metric(a, q, u, v);
  CHECK(evaluate(a, s / q.lambda, u, v) <= s);
  CHECK(evaluate(a, (s - 2 * q.abs_tol) / q.lambda, u, v) > s - 2 * q.abs_tol);
}

TEST_CASE("unbracketed growth pathology is reported") {
  // enormous tau-independent cost: the crossing sits beyond 2^80 * lambda
  const ActionCost huge(
      [](double, const Point& u, const Point& v) { return u == v ? 0.0 : 1e30; },
      CostClaims{}, "huge");
  InducedMetricQuery q;
  CHECK_THROWS_AS(induced_metric(huge, q, askt::pt(0.0), askt::pt(1.0)), numeric_error);
  q.max_doublings = 200;
  CHECK(induced_metric(huge, q, askt::pt(0.0), askt::pt(1.0)) ==
        doctest::Approx(1e30).epsilon(1e-9));
}

TEST_CASE("variational bounds bracket the bisection value") {
  const ActionCost a = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const Point u = askt::pt(0.1), v = askt::pt(1.7);
  const auto coarse = geometric_grid(1e-4, 1e4, 400);
  for (double lambda : {0.25, 1.0, 4.0}) {
    InducedMetricQuery q;
    q.lambda = lambda;
    const double d = induced_metric(a, q, u, v);
    const MetricBounds b1 = induced_metric_bounds(a, lambda, u, v, coarse);
    CHECK(b1.lower <= d + 1e-9);
    CHECK(d <= b1.upper + 1e-9);
    // refine: dense linear grid in the window the coarse bounds certify
    std::vector<double> fine(400001);
    const double lo = 0.99 * b1.lower / lambda, hi = 1.01 * b1.upper / lambda;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      fine[i] = lo + (hi - lo) * static_cast<double>(i) / (fine.size() - 1);
    }
    const MetricBounds b2 = induced_metric_bounds(a, lambda, u, v, fine);
    CHECK(b2.lower <= d + 1e-9);
    CHECK(d <= b2.upper + 1e-9);
    CHECK(b2.upper - b2.lower < 1e-6);  // grid oracle pinches the bisection value
  }
}

TEST_CASE("bounds: single grid point at the fixed point, and u = v") {
  const ActionCost a = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const Point u = askt::pt(0.0), v = askt::pt(1.0);
  // a(tau,u,v) = 1/tau = lambda*tau at tau = 1/sqrt(lambda)
  const double lambda = 4.0;
  const double tau_star = 1.0 / std::sqrt(lambda);
  const MetricBounds b = induced_metric_bounds(a, lambda, u, v, {tau_star});
  CHECK(b.lower == doctest::Approx(lambda * tau_star));
  CHECK(b.upper == doctest::Approx(lambda * tau_star));

  const MetricBounds diag = induced_metric_bounds(a, 2.0, u, u, {0.5, 1.0, 3.0});
  CHECK(diag.lower == 0.0);
  CHECK(diag.upper == doctest::Approx(1.0));  // min over grid of lambda*tau
}

TEST_CASE("neighborhood membership") {
  const ActionCost a = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const Point u = askt::pt(0.0), v = askt::pt(1.0);
  CHECK(neighborhood_contains(a, u, u, {0.01, 1e-9}));
  CHECK_FALSE(neighborhood_contains(a, u, v, {1.0, 0.5}));  // a = 1
  CHECK(neighborhood_contains(a, u, v, {4.0, 0.5}));        // a = 0.25
}

TEST_CASE("cauchy diagnostic: 1/n is Cauchy, (-1)^n is not") {
  const ActionCost a = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const std::vector<double> grid = {0.1, 1.0, 10.0};

  std::vector<Point> harmonic, alternating, constant;
  for (int n = 1; n <= 60; ++n) {
    harmonic.push_back(askt::pt(1.0 / n));
    alternating.push_back(askt::pt(n % 2 ? -1.0 : 1.0));
    constant.push_back(askt::pt(0.42));
  }
  const CauchyReport hc = cauchy_diagnostic(a, harmonic, grid, 10, 1e-2);
  CHECK(hc.cauchy_at_tolerance);
  // oracle: the worst tail pair is (51, 60) at the smallest tau
  const double worst_direct = std::pow(1.0 / 51 - 1.0 / 60, 2) / 0.1;
  CHECK(hc.rows[0].max_cost == doctest::Approx(worst_direct));

  const CauchyReport ac = cauchy_diagnostic(a, alternating, grid, 10, 1e-2);
  CHECK_FALSE(ac.cauchy_at_tolerance);
  CHECK(ac.rows[0].max_cost == doctest::Approx(4.0 / 0.1));  // (2)^2/tau

  CHECK(cauchy_diagnostic(a, constant, grid, 10, 1e-12).cauchy_at_tolerance);
  CHECK_THROWS_AS(cauchy_diagnostic(a, harmonic, grid, 1, 1e-2), config_error);
}

TEST_CASE("property: d_lambda is a metric and obeys the sandwich estimates") {
  // two structurally different costs: a smooth metric cost and a sqrt compose
  const ActionCost smooth = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const ActionCost root = concave_compose(
      ConcaveCombiner::power(0.5),
      {from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0))});
  const std::vector<double> lambdas = {0.25, 0.5, 1.0, 2.0, 4.0};
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);

  for (const ActionCost* a : {&smooth, &root}) {
    InducedMetricQuery q;
    const auto d_at = [&](double lambda, const Point& x, const Point& y) {
      InducedMetricQuery qq = q;
      qq.lambda = lambda;
      return induced_metric(*a, qq, x, y);
    };
    for (int i = 0; i < 120; ++i) {
      const Point u = askt::pt(coord(rng), coord(rng));
      const Point v = askt::pt(coord(rng), coord(rng));
      const Point w = askt::pt(coord(rng), coord(rng));
      const double d_a = d_at(1.0, u, v);
      double prev_d = -1.0, prev_ratio = std::numeric_limits<double>::infinity();
      for (double lambda : lambdas) {
        const double d = d_at(lambda, u, v);
        // triangle inequality at 3*abs_tol
        CHECK(d <= d_at(lambda, u, w) + d_at(lambda, w, v) + 3 * q.abs_tol);
        // monotone in lambda; d_lambda/lambda anti-monotone
        if (prev_d >= 0.0) {
          CHECK(d >= prev_d - 2 * q.abs_tol);
          CHECK(d / lambda <= prev_ratio + 2 * q.abs_tol);
        }
        prev_d = d;
        prev_ratio = d / lambda;
        // equivalence bounds vs d_a
        CHECK(std::min(1.0, lambda) * d_a <= d + 2 * q.abs_tol);
        CHECK(d <= std::max(1.0, lambda) * d_a + 2 * q.abs_tol);
        // upper estimate d_lambda <= lambda*tau + a(tau,u,v) on sampled tau
        for (double tau : {0.1, 1.0, 5.0}) {
          CHECK(d <= lambda * tau + evaluate(*a, tau, u, v) + q.abs_tol);
        }
      }
    }
  }
}

TEST_CASE("property: closed form across gauges and lambdas (10*abs_tol)") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  InducedMetricQuery q;
  for (double p : {1.5, 2.0, 3.0}) {
    const ActionCost a = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(p));
    for (double lambda : {0.25, 1.0, 4.0}) {
      q.lambda = lambda;
      const double factor = lambda / std::pow(lambda, 1.0 / p);
      for (int i = 0; i < 60; ++i) {
        const Point u = askt::pt(coord(rng), coord(rng));
        const Point v = askt::pt(coord(rng), coord(rng));
        const double expect = factor * askt::euclid(u, v);
        CHECK(std::abs(induced_metric(a, q, u, v) - expect) < 10 * q.abs_tol);
      }
    }
  }
}
