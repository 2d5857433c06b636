#include "ask/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ask/errors.hpp"

namespace ask {

double ValidationReport::worst(const std::string& axiom) const {
  double w = 0.0;
  for (const auto& v : violations) {
    if (v.axiom == axiom) w = std::max(w, v.magnitude);
  }
  return w;
}

Metric Metric::euclidean_norm(double p, double scale) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw config_error("Metric: norm exponent must be a finite real >= 1");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw config_error("Metric: norm scale must be positive");
  }
  return Metric(Norm{p, scale});
}

static void require_square_finite(const std::vector<std::vector<double>>& d) {
  const std::size_t n = d.size();
  if (n == 0) throw config_error("Metric: empty distance table");
  for (const auto& row : d) {
    if (row.size() != n) throw config_error("Metric: distance table is not square");
    for (double x : row) {
      if (!std::isfinite(x)) throw config_error("Metric: non-finite table entry");
      if (x < 0) throw config_error("Metric: negative table entry");
    }
  }
}

Metric Metric::weighted_table(std::vector<std::vector<double>> d) {
  require_square_finite(d);
  ValidationReport rep = validate_table(d);
  for (const auto& v : rep.violations) {
    // symmetry and the diagonal must hold exactly; the triangle check gets
    // 1e-12 of slack for accumulated rounding in user-built tables
    if (v.axiom == "triangle" && v.magnitude <= 1e-12) continue;
    throw config_error("Metric: table violates the " + v.axiom + " axiom (worst magnitude " +
                       std::to_string(v.magnitude) + ")");
  }
  return Metric(Table{std::move(d)});
}

Metric Metric::weighted_table_unchecked(std::vector<std::vector<double>> d) {
  require_square_finite(d);
  return Metric(Table{std::move(d)});
}

std::size_t Metric::table_size() const {
  if (!is_table()) throw std::logic_error("Metric: table_size() on a norm metric");
  return std::get<Table>(rep_).d.size();
}

double Metric::table_at(std::size_t i, std::size_t j) const {
  return std::get<Table>(rep_).d[i][j];
}

double Metric::norm_exponent() const {
  if (is_table()) throw std::logic_error("Metric: norm_exponent() on a table metric");
  return std::get<Norm>(rep_).p;
}

double Metric::norm_scale() const {
  if (is_table()) throw std::logic_error("Metric: norm_scale() on a table metric");
  return std::get<Norm>(rep_).scale;
}

double Metric::operator()(const Point& u, const Point& v) const {
  return distance(*this, u, v);
}

double distance(const Metric& m, const Point& u, const Point& v) {
  if (m.is_table()) {
    if (!u.is_finite() || !v.is_finite()) {
      throw config_error("distance: table metric requires finite-space points");
    }
    const std::size_t n = m.table_size();
    if (u.cardinality() != n || v.cardinality() != n) {
      throw config_error("distance: point cardinality does not match table size");
    }
    return m.table_at(u.index(), v.index());
  }
  if (!u.is_euclidean() || !v.is_euclidean()) {
    throw config_error("distance: norm metric requires Euclidean points");
  }
  if (u.dim() != v.dim()) throw config_error("distance: dimension mismatch");
  const double p = m.norm_exponent();
  const double scale = m.norm_scale();
  const auto& a = u.coords();
  const auto& b = v.coords();
  if (p == 2.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = std::abs(a[i] - b[i]);
      s += d * d;
    }
    return scale * std::sqrt(s);
  }
  if (p == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return scale * s;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(std::abs(a[i] - b[i]), p);
  return scale * std::pow(s, 1.0 / p);
}

ValidationReport validate_table(const std::vector<std::vector<double>>& d) {
  ValidationReport rep;
  const std::size_t n = d.size();
  MetricViolation worst_sym{"symmetry", 0.0, {}};
  MetricViolation worst_diag{"zero_diagonal", 0.0, {}};
  MetricViolation worst_id{"identity", 0.0, {}};
  MetricViolation worst_tri{"triangle", 0.0, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(d[i][i]) > worst_diag.magnitude) worst_diag = {"zero_diagonal", std::abs(d[i][i]), {i, i, i}};
    for (std::size_t j = 0; j < n; ++j) {
      const double asym = std::abs(d[i][j] - d[j][i]);
      if (asym > worst_sym.magnitude) worst_sym = {"symmetry", asym, {i, j, j}};
      if (i != j && d[i][j] <= 0.0 && worst_id.magnitude == 0.0) {
        worst_id = {"identity", 1.0, {i, j, j}};  // off-diagonal zero: d(u,v)=0 with u!=v
      }
      for (std::size_t k = 0; k < n; ++k) {
        const double excess = d[i][k] - d[i][j] - d[j][k];
        if (excess > worst_tri.magnitude) worst_tri = {"triangle", excess, {i, j, k}};
      }
    }
  }
  for (const auto& v : {worst_sym, worst_diag, worst_id, worst_tri}) {
    if (v.magnitude > 0.0) rep.violations.push_back(v);
  }
  return rep;
}

ValidationReport validate_metric(const Metric& m,
                                 const std::vector<std::array<Point, 3>>& triples) {
  if (triples.empty()) throw config_error("validate_metric: empty sample set");
  ValidationReport rep;
  MetricViolation worst_sym{"symmetry", 0.0, {}};
  MetricViolation worst_diag{"zero_diagonal", 0.0, {}};
  MetricViolation worst_tri{"triangle", 0.0, {}};
  for (std::size_t s = 0; s < triples.size(); ++s) {
    const auto& [u, v, w] = triples[s];
    const double duv = distance(m, u, v);
    const double dvu = distance(m, v, u);
    const double asym = std::abs(duv - dvu);
    if (asym > worst_sym.magnitude) worst_sym = {"symmetry", asym, {s, s, s}};
    const double duu = distance(m, u, u);
    if (duu > worst_diag.magnitude) worst_diag = {"zero_diagonal", duu, {s, s, s}};
    const double excess = distance(m, u, w) - duv - distance(m, v, w);
    if (excess > worst_tri.magnitude) worst_tri = {"triangle", excess, {s, s, s}};
  }
  for (const auto& v : {worst_sym, worst_diag, worst_tri}) {
    if (v.magnitude > 0.0) rep.violations.push_back(v);
  }
  return rep;
}

Metric table_metric_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d")) {
    throw config_error("table metric: expected {\"n\": int, \"d\": [[...]]}");
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "n" && key != "d") throw config_error("table metric: unknown key '" + key + "'");
  }
  const auto n = j.at("n").get<std::size_t>();
  auto d = j.at("d").get<std::vector<std::vector<double>>>();
  if (d.size() != n) throw config_error("table metric: 'd' has " + std::to_string(d.size()) +
                                        " rows, expected " + std::to_string(n));
  return Metric::weighted_table(std::move(d));
}

}  // namespace ask
