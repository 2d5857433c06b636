#include "ask/integrand.hpp"

#include <cmath>

#include "ask/errors.hpp"

namespace ask {

Integrand::Integrand(Eval eval, std::string label)
    : eval_(std::move(eval)), label_(std::move(label)) {}

Integrand::Integrand(Eval eval, Grad grad, std::string label)
    : eval_(std::move(eval)), grad_(std::move(grad)), label_(std::move(label)) {}

void Integrand::gradient(const std::vector<double>& theta, const std::vector<double>& zeta,
                         std::vector<double>& g_theta, std::vector<double>& g_zeta) const {
  if (!grad_) throw std::logic_error("Integrand: no analytic gradient");
  grad_(theta, zeta, g_theta, g_zeta);
}

Integrand Integrand::quadratic(double scale) {
  if (!(scale > 0.0)) throw config_error("Integrand: scale must be positive");
  return Integrand(
      [scale](const std::vector<double>&, const std::vector<double>& zeta) {
        double s = 0.0;
        for (double z : zeta) s += z * z;
        return 0.5 * scale * s;
      },
      [scale](const std::vector<double>&, const std::vector<double>& zeta,
              std::vector<double>& gt, std::vector<double>& gz) {
        gt.assign(zeta.size(), 0.0);
        gz.resize(zeta.size());
        for (std::size_t i = 0; i < zeta.size(); ++i) gz[i] = scale * zeta[i];
      },
      "quadratic");
}

Integrand Integrand::velocity_power(double p, double scale) {
  if (!(p > 1.0)) throw config_error("Integrand: velocity power must be > 1");
  if (!(scale > 0.0)) throw config_error("Integrand: scale must be positive");
  return Integrand(
      [p, scale](const std::vector<double>&, const std::vector<double>& zeta) {
        double s = 0.0;
        for (double z : zeta) s += z * z;
        return (scale / p) * std::pow(s, p / 2.0);
      },
      [p, scale](const std::vector<double>&, const std::vector<double>& zeta,
                 std::vector<double>& gt, std::vector<double>& gz) {
        gt.assign(zeta.size(), 0.0);
        gz.resize(zeta.size());
        double s = 0.0;
        for (double z : zeta) s += z * z;
        const double c = (s == 0.0) ? 0.0 : scale * std::pow(s, p / 2.0 - 1.0);
        for (std::size_t i = 0; i < zeta.size(); ++i) gz[i] = c * zeta[i];
      },
      "velocity_power");
}

Integrand Integrand::state_weighted_quadratic() {
  return Integrand(
      [](const std::vector<double>& theta, const std::vector<double>& zeta) {
        double s = 0.0;
        for (double z : zeta) s += z * z;
        return (1.0 + theta[0] * theta[0]) * 0.5 * s;
      },
      [](const std::vector<double>& theta, const std::vector<double>& zeta,
         std::vector<double>& gt, std::vector<double>& gz) {
        double s = 0.0;
        for (double z : zeta) s += z * z;
        gt.assign(theta.size(), 0.0);
        gt[0] = theta[0] * s;
        gz.resize(zeta.size());
        const double w = 1.0 + theta[0] * theta[0];
        for (std::size_t i = 0; i < zeta.size(); ++i) gz[i] = w * zeta[i];
      },
      "state_weighted_quadratic");
}

Integrand Integrand::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw config_error("integrand: expected {\"kind\": ...}");
  const auto kind = j.at("kind").get<std::string>();
  for (const auto& [k, _] : j.items()) {
    if (k != "kind" && k != "scale" && k != "p") {
      throw config_error("integrand: unknown key '" + k + "'");
    }
  }
  const double scale = j.value("scale", 1.0);
  if (kind == "quadratic") return quadratic(scale);
  if (kind == "velocity_power") return velocity_power(j.at("p").get<double>(), scale);
  if (kind == "state_weighted_quadratic") return state_weighted_quadratic();
  throw config_error("integrand: unknown kind '" + kind + "'");
}

}  // namespace ask
