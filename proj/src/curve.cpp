#include "ask/curve.hpp"

#include <algorithm>
#include <cmath>

#include "ask/errors.hpp"

namespace ask {

Partition Partition::uniform(double a, double b, int pieces) {
  if (!(b > a)) throw config_error("Partition: empty interval");
  if (pieces < 1) throw config_error("Partition: needs at least one piece");
  Partition p;
  p.times.reserve(pieces + 1);
  for (int i = 0; i <= pieces; ++i) {
    p.times.push_back(a + (b - a) * static_cast<double>(i) / pieces);
  }
  p.times.front() = a;
  p.times.back() = b;
  return p;
}

void Partition::validate() const {
  if (times.size() < 2) throw config_error("Partition: needs at least two nodes");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw config_error("Partition: times must strictly increase");
  }
}

SampledCurve::SampledCurve(std::vector<double> times, std::vector<Point> points)
    : times_(std::move(times)), points_(std::move(points)) {
  if (times_.size() != points_.size()) throw config_error("SampledCurve: times/points size mismatch");
  if (times_.size() < 2) throw config_error("SampledCurve: needs at least two samples");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) throw config_error("SampledCurve: times must strictly increase");
  }
}

SampledCurve::SampledCurve(double a, double b, int samples, Evaluator eval) {
  if (!(b > a)) throw config_error("SampledCurve: empty interval");
  if (samples < 2) throw config_error("SampledCurve: needs at least two samples");
  if (!eval) throw config_error("SampledCurve: null evaluator");
  times_.reserve(samples);
  points_.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = (i == samples - 1) ? b : a + (b - a) * static_cast<double>(i) / (samples - 1);
    times_.push_back(t);
    points_.push_back(eval(t));
  }
  eval_ = std::move(eval);
}

Point SampledCurve::value_at(double t) const {
  const auto it = std::lower_bound(times_.begin(), times_.end(), t);
  if (it != times_.end() && *it == t) {
    return points_[static_cast<std::size_t>(it - times_.begin())];
  }
  if (eval_) {
    if (t < t_begin() || t > t_end()) {
      throw config_error("SampledCurve: query outside [a,b]");
    }
    return eval_(t);
  }
  throw config_error("SampledCurve: off-grid query without an analytic evaluator");
}

}  // namespace ask
