#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ask/point.hpp"
#include "json.hpp"

namespace ask {

// One observed failure of a metric axiom, with the witness that produced it.
struct MetricViolation {
  std::string axiom;  // "symmetry" | "zero_diagonal" | "triangle" | "identity"
  double magnitude = 0.0;
  std::array<std::size_t, 3> witness{};  // indices into the table / sample list
};

struct ValidationReport {
  std::vector<MetricViolation> violations;
  double worst(const std::string& axiom) const;
  bool valid() const { return violations.empty(); }
};

// A metric backend: the p-norm on Euclidean points or a dense distance table
// on a finite space. Table metrics are normally validated at registration
// (symmetry, zero diagonal, full triangle inequality); the unchecked factory
// exists so validate_metric can report on broken tables.
class Metric {
 public:
  static Metric euclidean_norm(double p, double scale = 1.0);
  static Metric weighted_table(std::vector<std::vector<double>> d);
  static Metric weighted_table_unchecked(std::vector<std::vector<double>> d);

  double operator()(const Point& u, const Point& v) const;

  bool is_table() const { return std::holds_alternative<Table>(rep_); }
  std::size_t table_size() const;
  double table_at(std::size_t i, std::size_t j) const;
  double norm_exponent() const;
  double norm_scale() const;

 private:
  struct Norm {
    double p;
    double scale;
  };
  struct Table {
    std::vector<std::vector<double>> d;
  };
  explicit Metric(Norm n) : rep_(n) {}
  explicit Metric(Table t) : rep_(std::move(t)) {}

  std::variant<Norm, Table> rep_;
};

double distance(const Metric& m, const Point& u, const Point& v);

// Exhaustively checks a raw table for the metric axioms.
ValidationReport validate_table(const std::vector<std::vector<double>>& d);

// Checks symmetry / identity / triangle inequality of `m` on the given
// point triples. Report-carrying: never throws on violations.
ValidationReport validate_metric(const Metric& m,
                                 const std::vector<std::array<Point, 3>>& triples);

// Loads a finite-space table metric from {"n": int, "d": [[...]]}.
Metric table_metric_from_json(const nlohmann::json& j);

}  // namespace ask
