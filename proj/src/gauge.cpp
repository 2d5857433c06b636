#include "ask/gauge.hpp"

#include <cmath>
#include <limits>

#include "ask/errors.hpp"

namespace ask {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ConvexGauge ConvexGauge::linear() { return ConvexGauge(Linear{}); }

ConvexGauge ConvexGauge::power(double p, double scale) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw config_error("ConvexGauge: power exponent must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw config_error("ConvexGauge: scale must be positive");
  return ConvexGauge(Power{p, scale});
}

ConvexGauge ConvexGauge::table_spline(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw config_error("ConvexGauge: spline needs at least 2 knots");
  if (knots.front().first != 0.0 || knots.front().second != 0.0) {
    throw config_error("ConvexGauge: spline must start at (0,0)");
  }
  double prev_slope = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const auto [r0, v0] = knots[i - 1];
    const auto [r1, v1] = knots[i];
    if (!std::isfinite(r1) || !std::isfinite(v1)) throw config_error("ConvexGauge: non-finite knot");
    if (!(r1 > r0)) throw config_error("ConvexGauge: knot abscissae must be strictly increasing");
    const double slope = (v1 - v0) / (r1 - r0);
    if (i == 1 && !(slope > 0.0)) {
      throw config_error("ConvexGauge: first segment slope must be positive (psi(a)>0 for a>0)");
    }
    if (i > 1 && slope < prev_slope) {
      throw config_error("ConvexGauge: slopes must be nondecreasing (convexity)");
    }
    prev_slope = slope;
  }
  return ConvexGauge(Spline{std::move(knots)});
}

double ConvexGauge::operator()(double r) const {
  if (r < 0.0) throw std::domain_error("ConvexGauge: negative argument");
  if (std::holds_alternative<Linear>(rep_)) return r;
  if (const auto* p = std::get_if<Power>(&rep_)) {
    return p->scale * std::pow(r, p->p);
  }
  const auto& knots = std::get<Spline>(rep_).knots;
  if (r >= knots.back().first) {
    const auto [r0, v0] = knots[knots.size() - 2];
    const auto [r1, v1] = knots.back();
    const double slope = (v1 - v0) / (r1 - r0);
    return v1 + slope * (r - r1);
  }
  std::size_t lo = 0, hi = knots.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (knots[mid].first <= r ? lo : hi) = mid;
  }
  const auto [r0, v0] = knots[lo];
  const auto [r1, v1] = knots[hi];
  return v0 + (v1 - v0) * (r - r0) / (r1 - r0);
}

double ConvexGauge::inverse(double value) const {
  if (value < 0.0) throw std::domain_error("ConvexGauge: inverse of a negative value");
  if (std::holds_alternative<Linear>(rep_)) return value;
  if (const auto* p = std::get_if<Power>(&rep_)) {
    return std::pow(value / p->scale, 1.0 / p->p);
  }
  if (value == 0.0) return 0.0;
  // monotone bisection; bracket by doubling past the last knot if needed
  const auto& self = *this;
  double hi = std::get<Spline>(rep_).knots.back().first;
  if (hi <= 0.0) hi = 1.0;
  int guard = 0;
  while (self(hi) < value) {
    hi *= 2.0;
    if (++guard > 200) throw numeric_error("ConvexGauge: inverse bracket not found");
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (self(mid) < value ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ConvexGauge::recession_slope() const {
  if (std::holds_alternative<Linear>(rep_)) return 1.0;
  if (const auto* p = std::get_if<Power>(&rep_)) {
    return p->p > 1.0 ? kInf : p->scale;
  }
  const auto& knots = std::get<Spline>(rep_).knots;
  const auto [r0, v0] = knots[knots.size() - 2];
  const auto [r1, v1] = knots.back();
  return (v1 - v0) / (r1 - r0);
}

bool ConvexGauge::superlinear() const { return recession_slope() == kInf; }

bool ConvexGauge::is_identity() const {
  if (std::holds_alternative<Linear>(rep_)) return true;
  if (const auto* p = std::get_if<Power>(&rep_)) return p->p == 1.0 && p->scale == 1.0;
  return false;
}

ConvexGauge ConvexGauge::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw config_error("gauge: expected {\"kind\": ...}");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    for (const auto& [k, _] : j.items()) {
      if (k != "kind") throw config_error("gauge: unknown key '" + k + "'");
    }
    return linear();
  }
  if (kind == "power") {
    double scale = 1.0;
    for (const auto& [k, _] : j.items()) {
      if (k != "kind" && k != "p" && k != "scale") throw config_error("gauge: unknown key '" + k + "'");
    }
    if (j.contains("scale")) scale = j.at("scale").get<double>();
    return power(j.at("p").get<double>(), scale);
  }
  if (kind == "table_spline") {
    for (const auto& [k, _] : j.items()) {
      if (k != "kind" && k != "knots") throw config_error("gauge: unknown key '" + k + "'");
    }
    std::vector<std::pair<double, double>> knots;
    for (const auto& kn : j.at("knots")) {
      if (!kn.is_array() || kn.size() != 2) throw config_error("gauge: knot must be [r, value]");
      knots.emplace_back(kn[0].get<double>(), kn[1].get<double>());
    }
    return table_spline(std::move(knots));
  }
  throw config_error("gauge: unknown kind '" + kind + "'");
}

nlohmann::json ConvexGauge::to_json() const {
  if (std::holds_alternative<Linear>(rep_)) return {{"kind", "linear"}};
  if (const auto* p = std::get_if<Power>(&rep_)) {
    return {{"kind", "power"}, {"p", p->p}, {"scale", p->scale}};
  }
  auto arr = nlohmann::json::array();
  for (const auto& [r, v] : std::get<Spline>(rep_).knots) arr.push_back({r, v});
  return {{"kind", "table_spline"}, {"knots", arr}};
}

}  // namespace ask
