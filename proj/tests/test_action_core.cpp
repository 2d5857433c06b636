#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ask/axioms.hpp"
#include "ask/combinators.hpp"
#include "ask/errors.hpp"
#include "ask/limits.hpp"
#include "helpers.hpp"

using namespace ask;

namespace {

// metric with a step drop at tau = 1: a = d * (1 if tau <= 1 else 1/2).
// Valid action cost (nonincreasing scale times a metric), discontinuous.
ActionCost step_cost() {
  return ActionCost(
      [](double tau, const Point& u, const Point& v) {
        return askt::euclid(u, v) * (tau <= 1.0 ? 1.0 : 0.5);
      },
      CostClaims{true, false, Growth::MetricLike}, "step");
}

}  // namespace

TEST_CASE("evaluate: metric-induced examples") {
  const ActionCost sq = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  CHECK(evaluate(sq, 1.0, askt::pt(0.0), askt::pt(2.0)) == doctest::Approx(4.0));
  CHECK(evaluate(sq, 0.37, askt::pt(0.7), askt::pt(0.7)) == 0.0);

  const ActionCost lin = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::linear());
  CHECK(evaluate(lin, 5.0, askt::pt(0.0), askt::pt(2.0)) == doctest::Approx(2.0));
  CHECK(evaluate(lin, 0.01, askt::pt(0.0), askt::pt(2.0)) ==
        evaluate(lin, 100.0, askt::pt(0.0), askt::pt(2.0)));

  CHECK_THROWS_AS(evaluate(sq, 0.0, askt::pt(0.0), askt::pt(1.0)), std::domain_error);
  CHECK_THROWS_AS(evaluate(sq, -1.0, askt::pt(0.0), askt::pt(1.0)), std::domain_error);
}

TEST_CASE("check_axioms passes on a compliant cost over 10^4 samples") {
  const ActionCost sq = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const auto corpus = askt::random_euclidean_corpus(64, 2, 11);
  const AxiomReport rep = check_axioms(sq, corpus, 10000, 1e-9, 123);
  CHECK(rep.all_pass());
  CHECK(rep.samples_checked == 10000);
}

TEST_CASE("check_axioms is deterministic and thread-count independent") {
  const ActionCost sq = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const auto corpus = askt::random_euclidean_corpus(32, 2, 5);
  AxiomCheckOptions opts1, opts4;
  opts4.threads = 4;
  const AxiomReport a = check_axioms(sq, corpus, 4000, 1e-9, 77, opts1);
  const AxiomReport b = check_axioms(sq, corpus, 4000, 1e-9, 77, opts4);
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].worst_violation == b.checks[i].worst_violation);
    CHECK(a.checks[i].sample_index == b.checks[i].sample_index);
  }
}

TEST_CASE("broken cost d*tau: concatenation and monotonicity violations found") {
  const ActionCost bad(
      [](double tau, const Point& u, const Point& v) { return askt::euclid(u, v) * tau; },
      CostClaims{}, "d_times_tau");
  const auto corpus = askt::random_euclidean_corpus(32, 1, 3);
  const AxiomReport rep = check_axioms(bad, corpus, 5000, 1e-9, 9);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.check("concatenation").pass);
  CHECK_FALSE(rep.check("tau_monotonicity").pass);
  // witness re-evaluates to the reported violation
  const auto& c = rep.check("concatenation");
  REQUIRE(c.witness.taus.size() == 2);
  REQUIRE(c.witness.points.size() == 3);
  const double lhs = evaluate(bad, c.witness.taus[0] + c.witness.taus[1], c.witness.points[0],
                              c.witness.points[2]);
  const double rhs = evaluate(bad, c.witness.taus[0], c.witness.points[0], c.witness.points[1]) +
                     evaluate(bad, c.witness.taus[1], c.witness.points[1], c.witness.points[2]);
  CHECK(lhs - rhs == doctest::Approx(c.worst_violation).epsilon(1e-12));
}

TEST_CASE("broken cost d+tau: positivity on the diagonal fails") {
  const ActionCost bad(
      [](double tau, const Point& u, const Point& v) { return askt::euclid(u, v) + tau; },
      CostClaims{}, "d_plus_tau");
  const auto corpus = askt::random_euclidean_corpus(16, 1, 3);
  const AxiomReport rep = check_axioms(bad, corpus, 2000, 1e-9, 1);
  CHECK_FALSE(rep.check("identity_diagonal").pass);
  const auto& c = rep.check("identity_diagonal");
  CHECK(c.worst_violation == doctest::Approx(c.witness.taus[0]));
}

TEST_CASE("finite corpora get the exhaustive checker") {
  const Metric m = Metric::weighted_table({{0, 2, 4}, {2, 0, 3}, {4, 3, 0}});
  const ActionCost a = from_metric(m, ConvexGauge::power(2.0));
  const AxiomReport rep = check_axioms(a, askt::finite_corpus(3), 10, 1e-9, 0);
  CHECK(rep.exhaustive);
  CHECK(rep.all_pass());
  CHECK(rep.samples_checked > 100);  // triples x tau-grid x splits
}

TEST_CASE("check_axioms rejects degenerate corpora") {
  const ActionCost sq = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  CHECK_THROWS_AS(check_axioms(sq, {askt::pt(1.0)}, 100, 1e-9, 0), config_error);
  CHECK_THROWS_AS(check_axioms(sq, {askt::pt(1.0), askt::pt(1.0)}, 100, 1e-9, 0), config_error);
}

TEST_CASE("one_sided_limit: continuous cost matches the direct evaluation") {
  const ActionCost sq = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const Point u = askt::pt(0.0), v = askt::pt(1.5);
  LimitSchedule sched;
  sched.tau0 = 0.1;
  for (double tau : {0.5, 1.0, 3.0}) {
    const double direct = evaluate(sq, tau, u, v);
    const LimitResult minus = one_sided_limit(sq, LimitSide::Minus, tau, u, v, sched);
    const LimitResult plus = one_sided_limit(sq, LimitSide::Plus, tau, u, v, sched);
    CHECK(minus.converged);
    CHECK(plus.converged);
    CHECK(minus.value == doctest::Approx(direct).epsilon(1e-6));
    CHECK(plus.value == doctest::Approx(direct).epsilon(1e-6));
    CHECK(minus.value <= direct + sched.rel_tol * (1.0 + direct));
    CHECK(direct <= plus.value + sched.rel_tol * (1.0 + direct));
  }
  // u = v: both sides vanish
  const LimitResult at_diag = one_sided_limit(sq, LimitSide::Minus, 1.0, u, u, sched);
  CHECK(at_diag.value == 0.0);
}

TEST_CASE("one_sided_limit: step cost has distinct one-sided values at the jump") {
  const ActionCost a = step_cost();
  const Point u = askt::pt(0.0), v = askt::pt(2.0);  // d = 2
  LimitSchedule sched;
  sched.tau0 = 0.25;
  const LimitResult minus = one_sided_limit(a, LimitSide::Minus, 1.0, u, v, sched);
  const LimitResult plus = one_sided_limit(a, LimitSide::Plus, 1.0, u, v, sched);
  CHECK(minus.value == doctest::Approx(1.0));  // d/2 from above
  CHECK(plus.value == doctest::Approx(2.0));   // d from below
}

TEST_CASE("one_sided_limit: non-convergence carries the last two values") {
  // decays too slowly for the tight tolerance and small step budget
  const ActionCost slow(
      [](double tau, const Point& u, const Point& v) {
        return askt::euclid(u, v) * (1.0 + 1.0 / std::sqrt(tau));
      },
      CostClaims{}, "slow");
  LimitSchedule sched;
  sched.tau0 = 0.3;
  sched.factor = 0.9;
  sched.max_steps = 8;
  sched.rel_tol = 1e-14;
  const LimitResult r =
      one_sided_limit(slow, LimitSide::Minus, 1.0, askt::pt(0.0), askt::pt(1.0), sched);
  CHECK_FALSE(r.converged);
  CHECK(r.steps == 8);
  CHECK(r.value != r.previous);
}

TEST_CASE("classify_growth: quadratic gauge diverges, linear stabilizes") {
  const Metric m = Metric::euclidean_norm(2.0);
  const Point u = askt::pt(0.0), v = askt::pt(1.0);
  LimitSchedule sched;
  sched.tau0 = 1.0;
  sched.max_steps = 80;

  const GrowthEstimate g2 =
      classify_growth(from_metric(m, ConvexGauge::power(2.0)), u, v, sched, 1e6);
  CHECK(g2.kind == GrowthKind::Diverging);

  const GrowthEstimate g1 =
      classify_growth(from_metric(m, ConvexGauge::linear()), u, v, sched, 1e6);
  CHECK(g1.kind == GrowthKind::MetricLike);
  CHECK(g1.value == doctest::Approx(1.0));

  // rescaled linear cost: a_sup = theta * d
  const GrowthEstimate gt =
      classify_growth(rescale(from_metric(m, ConvexGauge::linear()), 1.0, 2.5), u, v, sched, 1e6);
  CHECK(gt.kind == GrowthKind::MetricLike);
  CHECK(gt.value == doctest::Approx(2.5));

  CHECK_THROWS_AS(classify_growth(from_metric(m, ConvexGauge::power(2.0)), u, u, sched, 1e6),
                  std::invalid_argument);
}

TEST_CASE("property: monotone non-increase in tau on sampled pairs") {
  const ActionCost sq = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const ActionCost st = step_cost();
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto corpus = askt::random_euclidean_corpus(32, 1, 2);
  for (int i = 0; i < 4000; ++i) {
    const Point& u = corpus[rng() % corpus.size()];
    const Point& v = corpus[rng() % corpus.size()];
    const double t2 = 0.05 + 10.0 * unit(rng);
    const double t1 = t2 * (0.05 + 0.9 * unit(rng));
    for (const ActionCost* a : {&sq, &st}) {
      CHECK(evaluate(*a, t2, u, v) <= evaluate(*a, t1, u, v) + 1e-12);
    }
  }
}

TEST_CASE("property: empirical one-sided limits are action costs (concatenation at 1e-8)") {
  const ActionCost a = step_cost();
  LimitSchedule sched;
  sched.tau0 = 0.05;
  sched.rel_tol = 1e-11;

  const auto minus_fn = [&](double tau, const Point& u, const Point& v) {
    return one_sided_limit(a, LimitSide::Minus, tau, u, v, sched).value;
  };
  const auto plus_fn = [&](double tau, const Point& u, const Point& v) {
    LimitSchedule s = sched;
    s.tau0 = std::min(s.tau0, 0.5 * tau);
    return one_sided_limit(a, LimitSide::Plus, tau, u, v, s).value;
  };

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto corpus = askt::random_euclidean_corpus(16, 1, 8);
  double worst_minus = 0.0, worst_plus = 0.0;
  for (int i = 0; i < 300; ++i) {
    const Point& u1 = corpus[rng() % corpus.size()];
    const Point& u2 = corpus[rng() % corpus.size()];
    const Point& u3 = corpus[rng() % corpus.size()];
    const double tau = 0.3 + 2.0 * unit(rng);
    const double s = 0.1 + 0.8 * unit(rng);
    worst_minus = std::max(worst_minus, minus_fn(tau, u1, u3) - minus_fn(s * tau, u1, u2) -
                                            minus_fn(tau - s * tau, u2, u3));
    worst_plus = std::max(worst_plus, plus_fn(tau, u1, u3) - plus_fn(s * tau, u1, u2) -
                                          plus_fn(tau - s * tau, u2, u3));
  }
  CHECK(worst_minus <= 1e-8);
  CHECK(worst_plus <= 1e-8);
}

TEST_CASE("axiom report serializes to JSON with witnesses") {
  const ActionCost sq = from_metric(Metric::euclidean_norm(2.0), ConvexGauge::power(2.0));
  const auto corpus = askt::random_euclidean_corpus(8, 2, 1);
  const AxiomReport rep = check_axioms(sq, corpus, 500, 1e-9, 4);
  const nlohmann::json j = rep.to_json();
  CHECK(j.at("all_pass").get<bool>());
  CHECK(j.at("checks").size() == 5);
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("axiom"));
    CHECK(c.contains("worst_violation"));
    CHECK(c.contains("witness"));
    CHECK(c.contains("pass"));
  }
}
