#include "ask/energy.hpp"

#include <cmath>

#include "ask/errors.hpp"

namespace ask {

Energy::Energy(Eval eval, std::string label) : eval_(std::move(eval)), label_(std::move(label)) {}

Energy::Energy(Eval eval, Grad grad, std::string label)
    : eval_(std::move(eval)), grad_(std::move(grad)), label_(std::move(label)) {}

std::vector<double> Energy::gradient(double t, const Point& v) const {
  if (!grad_) throw std::logic_error("Energy: no analytic gradient");
  return grad_(t, v);
}

Energy Energy::quadratic(double scale) {
  if (!(scale > 0.0)) throw config_error("Energy: scale must be positive");
  return Energy(
      [scale](double, const Point& v) {
        double s = 0.0;
        for (double x : v.coords()) s += x * x;
        return 0.5 * scale * s;
      },
      [scale](double, const Point& v) {
        std::vector<double> g = v.coords();
        for (double& x : g) x *= scale;
        return g;
      },
      "quadratic");
}

Energy Energy::moving_well(double speed) {
  return Energy(
      [speed](double t, const Point& v) {
        const auto& c = v.coords();
        double s = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
          const double d = c[i] - (i == 0 ? speed * t : 0.0);
          s += d * d;
        }
        return 0.5 * s;
      },
      [speed](double t, const Point& v) {
        std::vector<double> g = v.coords();
        g[0] -= speed * t;
        return g;
      },
      "moving_well");
}

Energy Energy::table(std::vector<double> values) {
  if (values.empty()) throw config_error("Energy: empty value table");
  for (double v : values) {
    if (!std::isfinite(v)) throw config_error("Energy: non-finite table value");
  }
  return Energy(
      [values](double, const Point& v) {
        if (!v.is_finite() || v.cardinality() != values.size()) {
          throw config_error("Energy: point does not match the table space");
        }
        return values[v.index()];
      },
      "table");
}

Energy Energy::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw config_error("energy: expected {\"kind\": ...}");
  const auto kind = j.at("kind").get<std::string>();
  for (const auto& [k, _] : j.items()) {
    if (k != "kind" && k != "scale" && k != "speed" && k != "values") {
      throw config_error("energy: unknown key '" + k + "'");
    }
  }
  if (kind == "quadratic") return quadratic(j.value("scale", 1.0));
  if (kind == "moving_well") return moving_well(j.value("speed", 1.0));
  if (kind == "table") return table(j.at("values").get<std::vector<double>>());
  throw config_error("energy: unknown kind '" + kind + "'");
}

}  // namespace ask
