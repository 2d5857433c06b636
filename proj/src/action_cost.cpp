#include "ask/action_cost.hpp"

#include <cmath>
#include <stdexcept>

#include "ask/errors.hpp"

namespace ask {

double ActionCost::operator()(double tau, const Point& u, const Point& v) const {
  return evaluate(*this, tau, u, v);
}

double evaluate(const ActionCost& a, double tau, const Point& u, const Point& v) {
  if (!(tau > 0.0)) throw std::domain_error("evaluate: tau must be positive");
  const double value = a.evaluator()(tau, u, v);
  if (!std::isfinite(value)) {
    throw numeric_error("evaluate: cost '" + a.label() + "' returned a non-finite value");
  }
  if (value < 0.0) {
    throw numeric_error("evaluate: cost '" + a.label() + "' returned a negative value");
  }
  return value;
}

}  // namespace ask
