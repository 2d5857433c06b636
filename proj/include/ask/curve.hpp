#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ask/point.hpp"

namespace ask {

// Finite increasing list of times t0 = a < t1 < ... < tM = b.
struct Partition {
  std::vector<double> times;

  static Partition uniform(double a, double b, int pieces);
  void validate() const;
  std::size_t pieces() const { return times.size() - 1; }
};

// A curve known at a strictly increasing time grid, optionally backed by an
// analytic evaluator for off-grid queries. Off-grid values are never
// interpolated: without an evaluator, refinement is restricted to the
// sample grid.
class SampledCurve {
 public:
  using Evaluator = std::function<Point(double)>;

  SampledCurve(std::vector<double> times, std::vector<Point> points);
  SampledCurve(double a, double b, int samples, Evaluator eval);

  const std::vector<double>& times() const { return times_; }
  const std::vector<Point>& points() const { return points_; }
  double t_begin() const { return times_.front(); }
  double t_end() const { return times_.back(); }
  bool has_evaluator() const { return static_cast<bool>(eval_); }

  // exact grid value or the analytic evaluator; throws otherwise
  Point value_at(double t) const;

 private:
  std::vector<double> times_;
  std::vector<Point> points_;
  Evaluator eval_;
};

}  // namespace ask
