#include "ask/cost_spec.hpp"

#include <string>

#include "ask/errors.hpp"
#include "ask/integrand.hpp"
#include "ask/transcription.hpp"

namespace ask {

namespace {

void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || key == k;
    if (!ok) throw config_error(where + ": unknown key '" + key + "'");
  }
}

}  // namespace

SpaceSpec SpaceSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw config_error("space: expected {\"kind\": ...}");
  const auto kind = j.at("kind").get<std::string>();
  SpaceSpec s;
  if (kind == "euclidean") {
    reject_unknown_keys(j, {"kind", "dim"}, "space");
    s.kind = Kind::Euclidean;
    s.dim = j.at("dim").get<std::size_t>();
    if (s.dim == 0) throw config_error("space: dim must be positive");
    return s;
  }
  if (kind == "finite") {
    reject_unknown_keys(j, {"kind", "n", "d"}, "space");
    s.kind = Kind::Finite;
    s.table = table_metric_from_json(nlohmann::json{{"n", j.at("n")}, {"d", j.at("d")}});
    s.n = s.table->table_size();
    return s;
  }
  throw config_error("space: unknown kind '" + kind + "'");
}

Point SpaceSpec::parse_point(const nlohmann::json& j) const {
  if (kind == Kind::Euclidean) {
    if (!j.is_array()) throw config_error("point: expected a coordinate array");
    auto coords = j.get<std::vector<double>>();
    if (coords.size() != dim) {
      throw config_error("point: expected " + std::to_string(dim) + " coordinates");
    }
    return Point::euclidean(std::move(coords));
  }
  if (!j.is_number_unsigned() && !j.is_number_integer()) {
    throw config_error("point: expected a state index");
  }
  return Point::finite(j.get<std::size_t>(), n);
}

std::vector<Point> SpaceSpec::sample_corpus(std::size_t count, std::uint64_t seed,
                                            double box) const {
  std::vector<Point> corpus;
  if (kind == Kind::Finite) {
    corpus.reserve(n);
    for (std::size_t i = 0; i < n; ++i) corpus.push_back(Point::finite(i, n));
    return corpus;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-box, box);
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(dim);
    for (auto& x : c) x = coord(rng);
    corpus.push_back(Point::euclidean(std::move(c)));
  }
  return corpus;
}

double MetricCostStructure::closed_form_induced_metric(double lambda, const Point& u,
                                                       const Point& v) const {
  return lambda / psi.inverse(lambda) * distance(metric, u, v);
}

Metric metric_from_json(const nlohmann::json& j, const SpaceSpec& space) {
  if (!j.is_object() || !j.contains("kind")) throw config_error("metric: expected {\"kind\": ...}");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "euclidean_norm") {
    reject_unknown_keys(j, {"kind", "p", "scale"}, "metric");
    if (space.kind != SpaceSpec::Kind::Euclidean) {
      throw config_error("metric: euclidean_norm on a finite space");
    }
    return Metric::euclidean_norm(j.value("p", 2.0), j.value("scale", 1.0));
  }
  if (kind == "table") {
    reject_unknown_keys(j, {"kind", "n", "d"}, "metric");
    if (space.kind != SpaceSpec::Kind::Finite) {
      throw config_error("metric: table metric on a Euclidean space");
    }
    Metric m = table_metric_from_json(nlohmann::json{{"n", j.at("n")}, {"d", j.at("d")}});
    if (m.table_size() != space.n) throw config_error("metric: table size does not match space");
    return m;
  }
  if (kind == "space") {
    // shorthand for the finite space's registered table
    reject_unknown_keys(j, {"kind"}, "metric");
    if (!space.table) throw config_error("metric: 'space' shorthand needs a finite space");
    return *space.table;
  }
  throw config_error("metric: unknown kind '" + kind + "'");
}

namespace {

ConcaveCombiner combiner_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw config_error("combiner: expected {\"kind\": ...}");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "power") {
    reject_unknown_keys(j, {"kind", "q"}, "combiner");
    return ConcaveCombiner::power(j.at("q").get<double>());
  }
  if (kind == "truncate") {
    reject_unknown_keys(j, {"kind", "lambda"}, "combiner");
    return ConcaveCombiner::truncate(j.at("lambda").get<double>());
  }
  throw config_error("combiner: unknown kind '" + kind + "'");
}

}  // namespace

ParsedCost cost_from_json(const nlohmann::json& j, const SpaceSpec& space) {
  if (!j.is_object() || !j.contains("kind")) throw config_error("cost: expected {\"kind\": ...}");
  const auto kind = j.at("kind").get<std::string>();

  if (kind == "from_metric") {
    reject_unknown_keys(j, {"kind", "metric", "psi"}, "cost");
    Metric m = metric_from_json(j.at("metric"), space);
    ConvexGauge psi = ConvexGauge::from_json(j.at("psi"));
    ParsedCost out{from_metric(m, psi), MetricCostStructure{m, psi}};
    return out;
  }
  if (kind == "convex_transform") {
    reject_unknown_keys(j, {"kind", "base", "psi"}, "cost");
    ParsedCost base = cost_from_json(j.at("base"), space);
    return {convex_transform(std::move(base.cost), ConvexGauge::from_json(j.at("psi"))),
            std::nullopt};
  }
  if (kind == "rescale") {
    reject_unknown_keys(j, {"kind", "base", "lambda", "theta"}, "cost");
    ParsedCost base = cost_from_json(j.at("base"), space);
    return {rescale(std::move(base.cost), j.at("lambda").get<double>(),
                    j.at("theta").get<double>()),
            std::nullopt};
  }
  if (kind == "linear_combination") {
    reject_unknown_keys(j, {"kind", "terms"}, "cost");
    std::vector<std::pair<double, ActionCost>> terms;
    for (const auto& t : j.at("terms")) {
      reject_unknown_keys(t, {"theta", "cost"}, "cost term");
      terms.emplace_back(t.at("theta").get<double>(),
                         cost_from_json(t.at("cost"), space).cost);
    }
    return {linear_combination(std::move(terms)), std::nullopt};
  }
  if (kind == "concave_compose") {
    reject_unknown_keys(j, {"kind", "h", "costs"}, "cost");
    std::vector<ActionCost> costs;
    for (const auto& c : j.at("costs")) costs.push_back(cost_from_json(c, space).cost);
    return {concave_compose(combiner_from_json(j.at("h")), std::move(costs)), std::nullopt};
  }
  if (kind == "truncated_metric_sup") {
    reject_unknown_keys(j, {"kind", "family"}, "cost");
    std::vector<double> lambdas;
    std::vector<Metric> metrics;
    for (const auto& entry : j.at("family")) {
      reject_unknown_keys(entry, {"lambda", "metric"}, "family entry");
      lambdas.push_back(entry.at("lambda").get<double>());
      metrics.push_back(metric_from_json(entry.at("metric"), space));
    }
    return {truncated_metric_sup(MetricFamily(std::move(lambdas), std::move(metrics))),
            std::nullopt};
  }
  if (kind == "action_integral") {
    reject_unknown_keys(j, {"kind", "integrand", "segments"}, "cost");
    if (space.kind != SpaceSpec::Kind::Euclidean) {
      throw config_error("cost: action_integral needs a Euclidean space");
    }
    return {wrap_as_action_cost(Integrand::from_json(j.at("integrand")),
                                j.value("segments", 16)),
            std::nullopt};
  }
  throw config_error("cost: unknown kind '" + kind + "'");
}

}  // namespace ask
