#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ask/action_cost.hpp"
#include "json.hpp"

namespace ask {

struct AxiomWitness {
  std::vector<double> taus;
  std::vector<Point> points;
};

// Worst observed violation of one axiom over the sampled set, with the
// witness that produced it. `scale` is the magnitude of the compared
// quantities at the witness; the pass rule is worst <= tol*(1 + scale).
struct AxiomCheck {
  std::string axiom;
  double worst_violation = 0.0;
  double scale = 0.0;
  AxiomWitness witness;
  std::uint64_t sample_index = 0;
  bool pass = true;

  nlohmann::json to_json() const;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  std::uint64_t samples_checked = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  bool exhaustive = false;

  bool all_pass() const;
  const AxiomCheck& check(const std::string& axiom) const;
  nlohmann::json to_json() const;
};

struct AxiomCheckOptions {
  double tau_min = 0.1;
  double tau_max = 10.0;
  int threads = 1;
  // finite corpora switch to exhaustive triples x tau-grid when the total
  // work stays under this budget
  std::uint64_t exhaustive_budget = 20'000'000;
};

// Samples (tau, u1, u2, u3) tuples and probes the action-cost axioms:
// zero on the diagonal, positivity off it, symmetry, the concatenation
// inequality and monotone non-increase in tau. Deterministic given the
// seed regardless of thread count (per-sample RNG streams). Corpora of
// finite-space points are checked exhaustively on a tau-grid instead.
AxiomReport check_axioms(const ActionCost& a, const std::vector<Point>& corpus,
                         std::uint64_t n_samples, double tol, std::uint64_t rng_seed,
                         const AxiomCheckOptions& opts = {});

}  // namespace ask
