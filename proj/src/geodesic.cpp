#include "ask/geodesic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ask/action_functional.hpp"
#include "ask/errors.hpp"

namespace ask {

double GeodesicBudget::level_slack(int n) const { return 0.5 * eta * std::pow(4.0, -n); }

void GeodesicBudget::validate() const {
  if (!(eta > 0.0)) throw config_error("GeodesicBudget: eta must be positive");
  if (depth < 1) throw config_error("GeodesicBudget: depth must be >= 1");
}

MidpointResult find_midpoint(const ActionCost& a, double rho, const Point& u, const Point& v,
                             double eps, const MidpointSearch& search) {
  if (!(rho > 0.0)) throw std::domain_error("find_midpoint: rho must be positive");
  if (!(eps > 0.0)) throw std::domain_error("find_midpoint: eps must be positive");

  const double base = evaluate(a, rho, u, v);
  const double half = 0.5 * rho;
  const auto leg_sum = [&](const Point& w) {
    return evaluate(a, half, u, w) + evaluate(a, half, w, v);
  };

  MidpointResult res{u, 0.0, base, 0.0, false};
  if (u == v) {
    res.leg_sum = leg_sum(u);
    res.excess = res.leg_sum - base;
    res.found = true;
    return res;
  }

  if (u.is_finite()) {
    if (!v.is_finite() || v.cardinality() != u.cardinality()) {
      throw config_error("find_midpoint: endpoints must live in the same space");
    }
    // ties on the sum resolve to the most balanced split (smaller max leg):
    // metric-like costs tie along geodesics and the balanced node is the one
    // the next refinement level can keep splitting
    double best = std::numeric_limits<double>::infinity();
    double best_spread = std::numeric_limits<double>::infinity();
    Point best_w = u;
    for (std::size_t i = 0; i < u.cardinality(); ++i) {
      const Point w = Point::finite(i, u.cardinality());
      const double l1 = evaluate(a, half, u, w);
      const double l2 = evaluate(a, half, w, v);
      const double s = l1 + l2;
      const double spread = std::max(l1, l2);
      if (s < best - 1e-15 || (s <= best + 1e-15 && spread < best_spread)) {
        best = s;
        best_spread = spread;
        best_w = w;
      }
    }
    res.w = best_w;
    res.leg_sum = best;
  } else {
    if (!v.is_euclidean() || u.dim() != v.dim()) {
      throw config_error("find_midpoint: endpoints must live in the same space");
    }
    std::vector<double> start(u.dim());
    double spread = 0.0;
    for (std::size_t d = 0; d < u.dim(); ++d) {
      start[d] = 0.5 * (u.coords()[d] + v.coords()[d]);
      spread = std::max(spread, std::abs(v.coords()[d] - u.coords()[d]));
    }
    CompassOptions copts = search.compass;
    copts.init_step = std::max(copts.init_step * spread, 1e-8);
    const Objective f = [&](const std::vector<double>& x) {
      return leg_sum(Point::euclidean(x));
    };
    const CompassResult cr = compass_search(f, std::move(start), copts);
    res.w = Point::euclidean(cr.x);
    res.leg_sum = cr.value;
  }
  res.excess = res.leg_sum - base;
  res.found = res.excess <= eps;
  return res;
}

DyadicGeodesic dyadic_geodesic(const ActionCost& a, double tau, const Point& u0, const Point& u1,
                               const GeodesicBudget& budget, const MidpointSearch& search) {
  budget.validate();
  if (!(tau > 0.0)) throw std::domain_error("dyadic_geodesic: tau must be positive");

  DyadicGeodesic out{SampledCurve({0.0, tau}, {u0, u1}), {}, evaluate(a, tau, u0, u1)};
  std::vector<Point> nodes = {u0, u1};

  for (int level = 0; level < budget.depth; ++level) {
    const double rho = tau / std::pow(2.0, level);
    const double slack = budget.level_slack(level);
    std::vector<Point> refined;
    refined.reserve(nodes.size() * 2 - 1);
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
      refined.push_back(nodes[j]);
      const MidpointResult mid = find_midpoint(a, rho, nodes[j], nodes[j + 1], slack, search);
      if (!mid.found) {
        throw numeric_error("dyadic_geodesic: midpoint search failed at level " +
                            std::to_string(level) + " (excess " + std::to_string(mid.excess) +
                            " > slack " + std::to_string(slack) + ")");
      }
      refined.push_back(mid.w);
    }
    refined.push_back(nodes.back());
    nodes = std::move(refined);

    // partition action at this depth, for the per-level budget check
    const double dt = tau / static_cast<double>(nodes.size() - 1);
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
      sum += evaluate(a, dt, nodes[j], nodes[j + 1]);
    }
    out.level_action_sums.push_back(sum);
  }

  std::vector<double> times(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    times[j] = tau * static_cast<double>(j) / static_cast<double>(nodes.size() - 1);
  }
  times.back() = tau;
  out.curve = SampledCurve(std::move(times), std::move(nodes));
  return out;
}

double geodesic_action_gap(const ActionCost& a, double tau, const Point& u0, const Point& u1,
                           const SampledCurve& omega) {
  if (!(omega.points().front() == u0) || !(omega.points().back() == u1)) {
    throw config_error("geodesic_action_gap: curve endpoints do not match");
  }
  if (std::abs(omega.t_end() - omega.t_begin() - tau) > 1e-12 * std::max(1.0, tau)) {
    throw config_error("geodesic_action_gap: curve horizon does not match tau");
  }
  const Partition full{omega.times()};
  return action_on_partition(a, omega, full) - evaluate(a, tau, u0, u1);
}

}  // namespace ask
