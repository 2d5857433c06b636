#pragma once

#include <functional>
#include <string>
#include <utility>

#include "ask/point.hpp"

namespace ask {

enum class Growth { MetricLike, Superlinear, Unknown };

// Structural claims carried by a cost. These are declarations to be probed
// by check_axioms, never trusted.
struct CostClaims {
  bool symmetric = true;
  bool continuous = false;
  Growth growth = Growth::Unknown;
};

// A time-parametrized cost (tau, u, v) -> [0, inf). Evaluators must be pure:
// the checker and the solvers evaluate them from concurrent workers.
class ActionCost {
 public:
  using Evaluator = std::function<double(double, const Point&, const Point&)>;

  ActionCost() = default;
  ActionCost(Evaluator eval, CostClaims claims, std::string label = "cost")
      : eval_(std::move(eval)), claims_(claims), label_(std::move(label)) {}

  double operator()(double tau, const Point& u, const Point& v) const;

  const CostClaims& claims() const { return claims_; }
  const std::string& label() const { return label_; }
  const Evaluator& evaluator() const { return eval_; }

 private:
  Evaluator eval_;
  CostClaims claims_;
  std::string label_;
};

// Checked evaluation: rejects tau <= 0 and non-finite or negative values.
double evaluate(const ActionCost& a, double tau, const Point& u, const Point& v);

}  // namespace ask
