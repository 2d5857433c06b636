#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace ask {

// Convex gauge psi: [0,inf) -> [0,inf) with psi(0)=0, psi(a)>0 for a>0,
// nondecreasing. Backs the convex cost construction tau*psi(x/tau).
class ConvexGauge {
 public:
  static ConvexGauge linear();                             // psi(r) = r
  static ConvexGauge power(double p, double scale = 1.0);  // psi(r) = scale * r^p, p >= 1
  // Convex piecewise-linear gauge through (0,0); convexity is certified at
  // load by nondecreasing segment slopes, positivity by a positive first
  // slope. Extends past the last knot with the final slope.
  static ConvexGauge table_spline(std::vector<std::pair<double, double>> knots);

  double operator()(double r) const;

  // psi^{-1}; analytic for power/linear, monotone bisection for splines.
  double inverse(double value) const;

  // recession slope psi'_inf = lim psi(r)/r; +inf means superlinear growth
  double recession_slope() const;
  bool superlinear() const;

  bool is_identity() const;

  static ConvexGauge from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  struct Linear {};
  struct Power {
    double p;
    double scale;
  };
  struct Spline {
    std::vector<std::pair<double, double>> knots;  // (r, psi(r)), r strictly increasing
  };
  explicit ConvexGauge(Linear l) : rep_(l) {}
  explicit ConvexGauge(Power p) : rep_(p) {}
  explicit ConvexGauge(Spline s) : rep_(std::move(s)) {}

  std::variant<Linear, Power, Spline> rep_;
};

}  // namespace ask
