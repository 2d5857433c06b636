#include "ask/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

#include "ask/errors.hpp"

namespace ask {

namespace {

constexpr const char* kAxiomNames[] = {"identity_diagonal", "positivity_offdiagonal",
                                       "symmetry", "concatenation", "tau_monotonicity"};
constexpr int kNumAxioms = 5;

// splitmix64: decorrelates per-sample RNG streams from (seed, index)
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct WorstTracker {
  double violation = 0.0;
  double scale = 0.0;
  AxiomWitness witness;
  std::uint64_t index = 0;
  bool any = false;

  void offer(double v, double s, AxiomWitness w, std::uint64_t idx) {
    // ties resolve to the smallest sample index so parallel merges stay
    // deterministic
    if (any && (v < violation || (v == violation && idx >= index))) return;
    violation = v;
    scale = s;
    witness = std::move(w);
    index = idx;
    any = true;
  }

  void merge(const WorstTracker& o) {
    if (o.any) offer(o.violation, o.scale, o.witness, o.index);
  }
};

struct SampleCase {
  double tau = 1.0;
  double split = 0.5;     // concatenation split fraction
  double tau_ratio = 0.5; // tau' = ratio * tau for the monotonicity pair
  const Point* u1 = nullptr;
  const Point* u2 = nullptr;
  const Point* u3 = nullptr;
};

void run_case(const ActionCost& a, const SampleCase& c, double, std::uint64_t idx,
              WorstTracker* worst) {
  const Point &u1 = *c.u1, &u2 = *c.u2, &u3 = *c.u3;
  const double tau = c.tau;

  // (i) zero on the diagonal
  {
    const double v = evaluate(a, tau, u1, u1);
    worst[0].offer(std::abs(v), 1.0, {{tau}, {u1}}, idx);
  }
  // (i') strictly positive off the diagonal
  if (u1 != u2) {
    const double v = evaluate(a, tau, u1, u2);
    const double viol = (v > 0.0) ? 0.0 : std::max(1.0, -v);
    worst[1].offer(viol, 1.0, {{tau}, {u1, u2}}, idx);
  }
  // (ii) symmetry
  {
    const double lhs = evaluate(a, tau, u1, u2);
    const double rhs = evaluate(a, tau, u2, u1);
    worst[2].offer(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)),
                   {{tau}, {u1, u2}}, idx);
  }
  // (iii) concatenation
  {
    const double t1 = c.split * tau, t2 = tau - c.split * tau;
    const double lhs = evaluate(a, t1 + t2, u1, u3);
    const double rhs = evaluate(a, t1, u1, u2) + evaluate(a, t2, u2, u3);
    worst[3].offer(std::max(0.0, lhs - rhs), std::abs(rhs), {{t1, t2}, {u1, u2, u3}}, idx);
  }
  // (iv) monotone non-increase in tau
  {
    const double tlo = c.tau_ratio * tau, thi = tau;
    const double vlo = evaluate(a, tlo, u1, u2);
    const double vhi = evaluate(a, thi, u1, u2);
    worst[4].offer(std::max(0.0, vhi - vlo), std::abs(vlo), {{tlo, thi}, {u1, u2}}, idx);
  }
}

SampleCase draw_case(const std::vector<Point>& corpus, std::uint64_t seed, std::uint64_t idx,
                     const AxiomCheckOptions& opts) {
  std::mt19937_64 rng(mix(seed ^ mix(idx)));
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SampleCase c;
  c.u1 = &corpus[pick(rng)];
  c.u2 = &corpus[pick(rng)];
  c.u3 = &corpus[pick(rng)];
  const double lo = std::log(opts.tau_min), hi = std::log(opts.tau_max);
  c.tau = std::exp(lo + (hi - lo) * unit(rng));
  c.split = 0.1 + 0.8 * unit(rng);      // avoids degenerate near-zero legs
  c.tau_ratio = 0.1 + 0.8 * unit(rng);  // tau' strictly below tau
  return c;
}

bool all_finite_points(const std::vector<Point>& corpus) {
  return std::all_of(corpus.begin(), corpus.end(),
                     [](const Point& p) { return p.is_finite(); });
}

}  // namespace

nlohmann::json AxiomCheck::to_json() const {
  nlohmann::json w;
  w["tau"] = witness.taus;
  auto pts = nlohmann::json::array();
  for (const auto& p : witness.points) {
    if (p.is_finite()) {
      pts.push_back(p.index());
    } else {
      pts.push_back(p.coords());
    }
  }
  w["points"] = pts;
  return nlohmann::json{{"axiom", axiom},
                        {"worst_violation", worst_violation},
                        {"scale", scale},
                        {"witness", w},
                        {"pass", pass}};
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck& AxiomReport::check(const std::string& axiom) const {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return c;
  }
  throw std::out_of_range("AxiomReport: no check named '" + axiom + "'");
}

nlohmann::json AxiomReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  return nlohmann::json{{"checks", arr},
                        {"samples_checked", samples_checked},
                        {"tol", tol},
                        {"seed", seed},
                        {"exhaustive", exhaustive},
                        {"all_pass", all_pass()}};
}

AxiomReport check_axioms(const ActionCost& a, const std::vector<Point>& corpus,
                         std::uint64_t n_samples, double tol, std::uint64_t rng_seed,
                         const AxiomCheckOptions& opts) {
  if (corpus.size() < 2) throw config_error("check_axioms: corpus needs at least 2 points");
  if (!(tol > 0.0)) throw config_error("check_axioms: tol must be positive");
  bool distinct = false;
  for (std::size_t i = 1; i < corpus.size() && !distinct; ++i) distinct = !(corpus[i] == corpus[0]);
  if (!distinct) throw config_error("check_axioms: corpus needs at least 2 distinct points");

  std::vector<WorstTracker> worst(kNumAxioms);
  std::uint64_t total = 0;
  bool exhaustive = false;

  const std::vector<double> tau_grid = {opts.tau_min, std::sqrt(opts.tau_min * opts.tau_max) / 2.0,
                                        1.0, 2.0 * std::sqrt(opts.tau_min * opts.tau_max),
                                        opts.tau_max};
  const std::vector<double> splits = {0.25, 0.5, 0.75};

  const std::uint64_t n = corpus.size();
  const std::uint64_t exhaustive_work = n * n * n * tau_grid.size() * splits.size();
  if (all_finite_points(corpus) && exhaustive_work <= opts.exhaustive_budget) {
    exhaustive = true;
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (double tau : tau_grid) {
            for (double s : splits) {
              SampleCase c{tau, s, s, &corpus[i], &corpus[j], &corpus[k]};
              run_case(a, c, tol, idx++, worst.data());
            }
          }
        }
      }
    }
    total = idx;
  } else {
    const int threads = std::max(1, opts.threads);
    total = n_samples;
    if (threads == 1) {
      for (std::uint64_t i = 0; i < n_samples; ++i) {
        const SampleCase c = draw_case(corpus, rng_seed, i, opts);
        run_case(a, c, tol, i, worst.data());
      }
    } else {
      // per-sample RNG streams keep the merged result independent of the
      // worker count
      const std::uint64_t chunk = (n_samples + threads - 1) / threads;
      std::vector<std::future<std::vector<WorstTracker>>> futs;
      for (int t = 0; t < threads; ++t) {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min<std::uint64_t>(n_samples, lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
          std::vector<WorstTracker> local(kNumAxioms);
          for (std::uint64_t i = lo; i < hi; ++i) {
            const SampleCase c = draw_case(corpus, rng_seed, i, opts);
            run_case(a, c, tol, i, local.data());
          }
          return local;
        }));
      }
      for (auto& f : futs) {
        const auto local = f.get();
        for (int ax = 0; ax < kNumAxioms; ++ax) worst[ax].merge(local[ax]);
      }
    }
  }

  AxiomReport report;
  report.samples_checked = total;
  report.tol = tol;
  report.seed = rng_seed;
  report.exhaustive = exhaustive;
  for (int ax = 0; ax < kNumAxioms; ++ax) {
    AxiomCheck c;
    c.axiom = kAxiomNames[ax];
    c.worst_violation = worst[ax].violation;
    c.scale = worst[ax].scale;
    c.witness = worst[ax].witness;
    c.sample_index = worst[ax].index;
    c.pass = worst[ax].violation <= tol * (1.0 + worst[ax].scale);
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace ask
