#include "ask/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ask/action_functional.hpp"
#include "ask/axioms.hpp"
#include "ask/cost_spec.hpp"
#include "ask/csv.hpp"
#include "ask/curve.hpp"
#include "ask/density.hpp"
#include "ask/energy.hpp"
#include "ask/errors.hpp"
#include "ask/geodesic.hpp"
#include "ask/induced_metric.hpp"
#include "ask/mm.hpp"

namespace ask::cli {

namespace {

void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  if (!j.is_object()) throw config_error(where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || key == k;
    if (!ok) throw config_error(where + ": unknown key '" + key + "'");
  }
}

std::string output_path(const nlohmann::json& cfg, const char* key, const std::string& fallback) {
  if (cfg.contains("output")) {
    reject_unknown(cfg.at("output"), {"csv", "summary"}, "output");
    if (cfg.at("output").contains(key)) return cfg.at("output").at(key).get<std::string>();
  }
  return fallback;
}

void write_summary(const std::string& path, const nlohmann::json& summary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot open summary path '" + path + "'");
  out << summary.dump(2) << "\n";
}

LimitSchedule schedule_from_json(const nlohmann::json& j) {
  reject_unknown(j, {"tau0", "factor", "max_steps", "rel_tol"}, "schedule");
  LimitSchedule s;
  s.tau0 = j.value("tau0", s.tau0);
  s.factor = j.value("factor", s.factor);
  s.max_steps = j.value("max_steps", s.max_steps);
  s.rel_tol = j.value("rel_tol", s.rel_tol);
  s.validate();
  return s;
}

SampledCurve curve_from_json(const nlohmann::json& j, const SpaceSpec& space) {
  reject_unknown(j, {"kind", "times", "points", "power", "interval", "samples", "from", "to"},
                 "curve");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "polyline") {
    auto times = j.at("times").get<std::vector<double>>();
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) pts.push_back(space.parse_point(p));
    return SampledCurve(std::move(times), std::move(pts));
  }
  if (kind == "monomial") {
    const double p = j.at("power").get<double>();
    const auto iv = j.at("interval").get<std::vector<double>>();
    if (iv.size() != 2) throw config_error("curve: interval must be [a,b]");
    const int samples = j.value("samples", 33);
    return SampledCurve(iv[0], iv[1], samples, [p](double t) {
      return Point::euclidean({std::pow(t, p)});
    });
  }
  if (kind == "line") {
    const auto from = j.at("from").get<std::vector<double>>();
    const auto to = j.at("to").get<std::vector<double>>();
    const auto iv = j.at("interval").get<std::vector<double>>();
    if (iv.size() != 2) throw config_error("curve: interval must be [a,b]");
    if (from.size() != to.size()) throw config_error("curve: endpoint dimensions differ");
    const int samples = j.value("samples", 33);
    const double a = iv[0], b = iv[1];
    return SampledCurve(a, b, samples, [from, to, a, b](double t) {
      const double w = (t - a) / (b - a);
      std::vector<double> c(from.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = (1.0 - w) * from[i] + w * to[i];
      return Point::euclidean(std::move(c));
    });
  }
  throw config_error("curve: unknown kind '" + kind + "'");
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) {
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  }
  return g;
}

int threads_from(const nlohmann::json& overrides) {
  if (overrides.contains("threads")) return overrides.at("threads").get<int>();
  if (const char* env = std::getenv("ASK_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      throw config_error("ASK_THREADS is not an integer");
    }
  }
  return 1;
}

int run_check_axioms(const nlohmann::json& cfg, const nlohmann::json& overrides) {
  reject_unknown(cfg, {"seed", "space", "cost", "samples", "tol", "tau_min", "tau_max",
                       "corpus", "output"},
                 "check-axioms config");
  const SpaceSpec space = SpaceSpec::from_json(cfg.at("space"));
  const ParsedCost parsed = cost_from_json(cfg.at("cost"), space);
  const auto seed = cfg.value("seed", 0ULL);

  std::size_t corpus_count = 64;
  double box = 1.0;
  if (cfg.contains("corpus")) {
    reject_unknown(cfg.at("corpus"), {"count", "box"}, "corpus");
    corpus_count = cfg.at("corpus").value("count", corpus_count);
    box = cfg.at("corpus").value("box", box);
  }
  AxiomCheckOptions opts;
  opts.tau_min = cfg.value("tau_min", opts.tau_min);
  opts.tau_max = cfg.value("tau_max", opts.tau_max);
  opts.threads = threads_from(overrides);

  const auto corpus = space.sample_corpus(corpus_count, seed + 1, box);
  const AxiomReport report = check_axioms(parsed.cost, corpus, cfg.value("samples", 10000ULL),
                                          cfg.value("tol", 1e-9), seed, opts);
  write_summary(output_path(cfg, "summary", "check_axioms_summary.json"), report.to_json());
  return 0;
}

int run_metric(const nlohmann::json& cfg, const nlohmann::json& overrides) {
  reject_unknown(cfg, {"seed", "space", "cost", "lambda", "pairs", "random_pairs", "abs_tol",
                       "tau_grid", "output"},
                 "metric config");
  const SpaceSpec space = SpaceSpec::from_json(cfg.at("space"));
  const ParsedCost parsed = cost_from_json(cfg.at("cost"), space);
  const auto seed = cfg.value("seed", 0ULL);
  (void)overrides;

  std::vector<double> lambdas;
  if (cfg.at("lambda").is_array()) {
    lambdas = cfg.at("lambda").get<std::vector<double>>();
  } else {
    lambdas.push_back(cfg.at("lambda").get<double>());
  }

  std::vector<std::pair<Point, Point>> pairs;
  if (cfg.contains("pairs")) {
    for (const auto& pq : cfg.at("pairs")) {
      if (!pq.is_array() || pq.size() != 2) throw config_error("metric: pair must be [u, v]");
      pairs.emplace_back(space.parse_point(pq[0]), space.parse_point(pq[1]));
    }
  } else {
    const auto count = cfg.value("random_pairs", 16ULL);
    const auto corpus = space.sample_corpus(2 * count, seed + 1);
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
      pairs.emplace_back(corpus[i], corpus[i + 1]);
    }
  }

  InducedMetricQuery q;
  q.abs_tol = cfg.value("abs_tol", q.abs_tol);
  std::vector<double> tau_grid = cfg.contains("tau_grid")
                                     ? cfg.at("tau_grid").get<std::vector<double>>()
                                     : geometric_grid(1e-3, 1e3, 121);

  CsvWriter csv(output_path(cfg, "csv", "metric_out.csv"),
                {"u_id", "v_id", "lambda", "d_lambda", "lower", "upper", "closed_form"});
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [u, v] = pairs[i];
    for (double lambda : lambdas) {
      q.lambda = lambda;
      const double d = induced_metric(parsed.cost, q, u, v);
      const MetricBounds b = induced_metric_bounds(parsed.cost, lambda, u, v, tau_grid);
      std::string closed = "";
      if (parsed.structure) {
        closed = format_double(parsed.structure->closed_form_induced_metric(lambda, u, v));
      }
      csv.row({std::to_string(2 * i), std::to_string(2 * i + 1), format_double(lambda),
               format_double(d), format_double(b.lower), format_double(b.upper), closed});
      rows.push_back({{"lambda", lambda}, {"d_lambda", d}});
    }
  }
  csv.close();
  write_summary(output_path(cfg, "summary", "metric_summary.json"),
                {{"pairs", pairs.size()}, {"rows", rows.size()}});
  return 0;
}

int run_action(const nlohmann::json& cfg, const nlohmann::json&) {
  reject_unknown(cfg, {"seed", "space", "cost", "curve", "max_depth", "rel_tol", "output"},
                 "action config");
  const SpaceSpec space = SpaceSpec::from_json(cfg.at("space"));
  const ParsedCost parsed = cost_from_json(cfg.at("cost"), space);
  const SampledCurve curve = curve_from_json(cfg.at("curve"), space);

  const ActionEstimate est = estimate_action(parsed.cost, curve, cfg.value("max_depth", 10),
                                             cfg.value("rel_tol", 1e-8));
  CsvWriter csv(output_path(cfg, "csv", "action_out.csv"),
                {"depth", "partition_size", "action_value"});
  for (std::size_t d = 0; d < est.values_per_depth.size(); ++d) {
    csv.row({std::to_string(d), std::to_string(est.pieces_per_depth[d]),
             format_double(est.values_per_depth[d])});
  }
  csv.close();
  write_summary(output_path(cfg, "summary", "action_summary.json"),
                {{"value", est.value},
                 {"depth_reached", est.depth_reached},
                 {"converged", est.converged}});
  return 0;
}

int run_density(const nlohmann::json& cfg, const nlohmann::json&) {
  reject_unknown(cfg, {"seed", "space", "cost", "curve", "grid_n", "schedule", "output"},
                 "density config");
  const SpaceSpec space = SpaceSpec::from_json(cfg.at("space"));
  const ParsedCost parsed = cost_from_json(cfg.at("cost"), space);
  const SampledCurve curve = curve_from_json(cfg.at("curve"), space);
  LimitSchedule sched;
  sched.tau0 = 1e-2;
  sched.rel_tol = 1e-7;
  if (cfg.contains("schedule")) sched = schedule_from_json(cfg.at("schedule"));

  const ConsistencyReport rep =
      density_profile_and_consistency(parsed.cost, curve, cfg.value("grid_n", 128), sched);
  CsvWriter csv(output_path(cfg, "csv", "density_out.csv"), {"t", "density", "converged"});
  for (const auto& p : rep.profile.grid) {
    csv.row({format_double(p.t), format_double(p.value), p.converged ? "1" : "0"});
  }
  csv.close();
  write_summary(output_path(cfg, "summary", "density_summary.json"),
                {{"integral", rep.integral},
                 {"action_estimate", rep.action_estimate},
                 {"gap", rep.gap}});
  return 0;
}

int node_level(std::size_t k, std::size_t count) {
  // dyadic insertion level of node k on a grid of 2^N + 1 nodes:
  // endpoints 0, center 1, quarter points 2, ...
  if (k == 0 || k + 1 == count) return 0;
  int level = 0;
  for (std::size_t span = count - 1; span > 1; span /= 2) ++level;  // N
  while (k % 2 == 0) {
    k /= 2;
    --level;
  }
  return level;
}

int run_geodesic(const nlohmann::json& cfg, const nlohmann::json& overrides) {
  reject_unknown(cfg, {"seed", "space", "cost", "tau", "eta", "depth", "u0", "u1", "output"},
                 "geodesic config");
  const SpaceSpec space = SpaceSpec::from_json(cfg.at("space"));
  const ParsedCost parsed = cost_from_json(cfg.at("cost"), space);

  const double tau = overrides.value("tau", cfg.value("tau", 1.0));
  GeodesicBudget budget;
  budget.eta = overrides.value("eta", cfg.value("eta", 1e-3));
  budget.depth = overrides.value("depth", cfg.value("depth", 6));
  const Point u0 = space.parse_point(cfg.at("u0"));
  const Point u1 = space.parse_point(cfg.at("u1"));

  const DyadicGeodesic geo = dyadic_geodesic(parsed.cost, tau, u0, u1, budget);
  const double gap = geodesic_action_gap(parsed.cost, tau, u0, u1, geo.curve);

  std::vector<std::string> header{"t"};
  if (space.kind == SpaceSpec::Kind::Euclidean) {
    for (std::size_t d = 0; d < space.dim; ++d) header.push_back("x" + std::to_string(d));
  } else {
    header.push_back("state");
  }
  header.push_back("level");
  CsvWriter csv(output_path(cfg, "csv", "geodesic_out.csv"), header);
  const auto& pts = geo.curve.points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::vector<std::string> row{format_double(geo.curve.times()[k])};
    if (pts[k].is_euclidean()) {
      for (double c : pts[k].coords()) row.push_back(format_double(c));
    } else {
      row.push_back(std::to_string(pts[k].index()));
    }
    row.push_back(std::to_string(node_level(k, pts.size())));
    csv.row(row);
  }
  csv.close();
  write_summary(output_path(cfg, "summary", "geodesic_summary.json"),
                {{"cost", geo.base_cost},
                 {"var_on_grid", geo.level_action_sums.empty() ? geo.base_cost
                                                               : geo.level_action_sums.back()},
                 {"gap", gap}});
  return 0;
}

MMOptions mm_options_from(const nlohmann::json& cfg) {
  MMOptions opts;
  if (cfg.contains("minimizer")) {
    const auto& m = cfg.at("minimizer");
    reject_unknown(m, {"max_iters", "grad_tol"}, "minimizer");
    opts.descent.max_iters = m.value("max_iters", opts.descent.max_iters);
    opts.descent.grad_tol = m.value("grad_tol", opts.descent.grad_tol);
  }
  return opts;
}

int run_mm(const nlohmann::json& cfg, const nlohmann::json&) {
  reject_unknown(cfg, {"seed", "space", "cost", "energy", "tau", "T", "u0", "minimizer", "output"},
                 "mm config");
  const SpaceSpec space = SpaceSpec::from_json(cfg.at("space"));
  const ParsedCost parsed = cost_from_json(cfg.at("cost"), space);
  const Energy energy = Energy::from_json(cfg.at("energy"));
  const Point u0 = space.parse_point(cfg.at("u0"));
  const double tau = cfg.at("tau").get<double>();
  const double horizon = cfg.at("T").get<double>();

  const MMTrajectory traj = mm_solve(parsed.cost, energy, tau, horizon, u0, mm_options_from(cfg));

  std::vector<std::string> header{"n", "t"};
  if (space.kind == SpaceSpec::Kind::Euclidean) {
    for (std::size_t d = 0; d < space.dim; ++d) header.push_back("u" + std::to_string(d));
  } else {
    header.push_back("state");
  }
  header.push_back("energy");
  header.push_back("step_cost");
  CsvWriter csv(output_path(cfg, "csv", "mm_out.csv"), header);
  for (std::size_t n = 0; n < traj.values.size(); ++n) {
    std::vector<std::string> row{std::to_string(n), format_double(n * tau)};
    if (traj.values[n].is_euclidean()) {
      for (double c : traj.values[n].coords()) row.push_back(format_double(c));
    } else {
      row.push_back(std::to_string(traj.values[n].index()));
    }
    row.push_back(format_double(traj.energies[n]));
    row.push_back(format_double(n == 0 ? 0.0 : traj.step_costs[n - 1]));
    csv.row(row);
  }
  csv.close();
  write_summary(output_path(cfg, "summary", "mm_summary.json"),
                {{"steps", traj.steps()},
                 {"total_cost", traj.total_cost()},
                 {"final_energy", traj.energies.back()},
                 {"local_minimizers", traj.local_minimizers}});
  return 0;
}

int run_study(const nlohmann::json& cfg, const nlohmann::json&) {
  reject_unknown(cfg, {"seed", "space", "cost", "energy", "u0", "T", "tau_list", "reference",
                       "minimizer", "output"},
                 "study config");
  const SpaceSpec space = SpaceSpec::from_json(cfg.at("space"));
  const ParsedCost parsed = cost_from_json(cfg.at("cost"), space);
  const Energy energy = Energy::from_json(cfg.at("energy"));
  const Point u0 = space.parse_point(cfg.at("u0"));
  const double horizon = cfg.at("T").get<double>();
  auto tau_list = cfg.at("tau_list").get<std::vector<double>>();
  const MMOptions opts = mm_options_from(cfg);

  std::function<Point(double)> reference;
  const auto& ref = cfg.at("reference");
  reject_unknown(ref, {"kind"}, "reference");
  const auto ref_kind = ref.at("kind").get<std::string>();
  if (ref_kind == "exp_decay") {
    reference = [u0](double t) {
      std::vector<double> c = u0.coords();
      for (double& x : c) x *= std::exp(-t);
      return Point::euclidean(std::move(c));
    };
  } else if (ref_kind == "finest") {
    const MMTrajectory fine = mm_solve(parsed.cost, energy, tau_list.back(), horizon, u0, opts);
    auto shared = std::make_shared<MMTrajectory>(fine);
    reference = [shared](double t) { return shared->interpolant(t); };
  } else {
    throw config_error("study: unknown reference kind '" + ref_kind + "'");
  }

  const ConvergenceStudy study =
      mm_convergence_study(parsed.cost, energy, u0, horizon, tau_list, reference, opts);
  CsvWriter csv(output_path(cfg, "csv", "study_out.csv"), {"tau", "error", "order"});
  for (const auto& r : study.rows) {
    csv.row({format_double(r.tau), format_double(r.error), format_double(r.observed_order)});
  }
  csv.close();
  write_summary(output_path(cfg, "summary", "study_summary.json"),
                {{"fitted_order", study.fitted_order}});
  return 0;
}

}  // namespace

int run_subcommand(const std::string& name, const nlohmann::json& config,
                   const nlohmann::json& overrides) {
  try {
    if (name == "check-axioms") return run_check_axioms(config, overrides);
    if (name == "metric") return run_metric(config, overrides);
    if (name == "action") return run_action(config, overrides);
    if (name == "density") return run_density(config, overrides);
    if (name == "geodesic") return run_geodesic(config, overrides);
    if (name == "mm") return run_mm(config, overrides);
    if (name == "study") return run_study(config, overrides);
    throw config_error("unknown subcommand '" + name + "'");
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"action-space numerical toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  int threads = 0;
  double tau = -1.0, eta = -1.0;
  int depth = -1;

  const std::vector<std::string> names = {"check-axioms", "metric", "action", "density",
                                          "geodesic", "mm", "study"};
  for (const auto& n : names) {
    auto* sub = app.add_subcommand(n);
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--threads", threads, "worker cap (ASK_THREADS fallback)");
    if (n == "geodesic") {
      sub->add_option("--tau", tau, "time horizon");
      sub->add_option("--eta", eta, "total slack budget");
      sub->add_option("--depth", depth, "dyadic depth");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "config error: cannot open '" << config_path << "'\n";
    return 2;
  }
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  nlohmann::json overrides = nlohmann::json::object();
  if (threads > 0) overrides["threads"] = threads;
  if (tau > 0) overrides["tau"] = tau;
  if (eta > 0) overrides["eta"] = eta;
  if (depth > 0) overrides["depth"] = depth;

  return run_subcommand(app.get_subcommands().front()->get_name(), config, overrides);
}

}  // namespace ask::cli
