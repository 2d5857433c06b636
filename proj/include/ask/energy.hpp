#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ask/point.hpp"
#include "json.hpp"

namespace ask {

// Driving energy E(t, v) for the minimizing-movement functional. The
// gradient (in v) is optional; solvers fall back to finite differences.
class Energy {
 public:
  using Eval = std::function<double(double, const Point&)>;
  using Grad = std::function<std::vector<double>(double, const Point&)>;

  Energy(Eval eval, std::string label);
  Energy(Eval eval, Grad grad, std::string label);

  double operator()(double t, const Point& v) const { return eval_(t, v); }
  bool has_gradient() const { return static_cast<bool>(grad_); }
  std::vector<double> gradient(double t, const Point& v) const;
  const std::string& label() const { return label_; }

  // E(v) = 0.5 * scale * |v|^2
  static Energy quadratic(double scale = 1.0);
  // E(t,v) = 0.5 * |v - speed*t*e1|^2  (a well moving along the first axis)
  static Energy moving_well(double speed = 1.0);
  // finite space: one value per state, time-independent
  static Energy table(std::vector<double> values);

  static Energy from_json(const nlohmann::json& j);

 private:
  Eval eval_;
  Grad grad_;
  std::string label_;
};

}  // namespace ask
