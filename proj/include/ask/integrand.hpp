#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ask {

// Velocity integrand R(theta, zeta) for action-integral costs: nonnegative,
// R(theta,0)=0, convex and even in zeta. Analytic gradients are optional;
// the transcription falls back to central differences without them.
class Integrand {
 public:
  using Eval = std::function<double(const std::vector<double>&, const std::vector<double>&)>;
  using Grad = std::function<void(const std::vector<double>&, const std::vector<double>&,
                                  std::vector<double>&, std::vector<double>&)>;

  Integrand(Eval eval, std::string label);
  Integrand(Eval eval, Grad grad, std::string label);

  double operator()(const std::vector<double>& theta, const std::vector<double>& zeta) const {
    return eval_(theta, zeta);
  }
  bool has_gradient() const { return static_cast<bool>(grad_); }
  // writes dR/dtheta and dR/dzeta
  void gradient(const std::vector<double>& theta, const std::vector<double>& zeta,
                std::vector<double>& g_theta, std::vector<double>& g_zeta) const;
  const std::string& label() const { return label_; }

  // R = 0.5 * scale * |zeta|^2
  static Integrand quadratic(double scale = 1.0);
  // R = (scale/p) * |zeta|^p, p > 1
  static Integrand velocity_power(double p, double scale = 1.0);
  // R = (1 + theta_0^2) * 0.5 * |zeta|^2
  static Integrand state_weighted_quadratic();

  static Integrand from_json(const nlohmann::json& j);

 private:
  Eval eval_;
  Grad grad_;
  std::string label_;
};

}  // namespace ask
