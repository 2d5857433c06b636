#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "ask/action_cost.hpp"
#include "ask/point.hpp"

// Shared test fixtures and independent oracles. Everything here must stay
// independent of the implementation paths it is used to check.

namespace askt {

inline ask::Point pt(double x) { return ask::Point::euclidean({x}); }
inline ask::Point pt(double x, double y) { return ask::Point::euclidean({x, y}); }

inline std::vector<ask::Point> random_euclidean_corpus(std::size_t count, std::size_t dim,
                                                       std::uint64_t seed, double box = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-box, box);
  std::vector<ask::Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(dim);
    for (auto& x : c) x = coord(rng);
    out.push_back(ask::Point::euclidean(std::move(c)));
  }
  return out;
}

inline std::vector<ask::Point> finite_corpus(std::size_t n) {
  std::vector<ask::Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ask::Point::finite(i, n));
  return out;
}

// |x - y| on R^d, computed without the library's Metric
inline double euclid(const ask::Point& u, const ask::Point& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const double d = u.coords()[i] - v.coords()[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// a(tau,u,v) = tau * (|u-v|/tau)^p, written directly from the definition
inline ask::ActionCost direct_power_cost(double p) {
  return ask::ActionCost(
      [p](double tau, const ask::Point& u, const ask::Point& v) {
        const double d = euclid(u, v);
        return d == 0.0 ? 0.0 : tau * std::pow(d / tau, p);
      },
      ask::CostClaims{true, true, ask::Growth::Superlinear}, "direct_power");
}

// simple composite-Simpson quadrature oracle
template <typename F>
double simpson(F f, double a, double b, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace askt
