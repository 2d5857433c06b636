#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace ask {

// Element of a state space: either a Euclidean vector or an index into a
// finite space of known cardinality. Immutable after construction.
class Point {
 public:
  static Point euclidean(std::vector<double> coords);
  static Point finite(std::size_t index, std::size_t cardinality);

  bool is_euclidean() const { return std::holds_alternative<Euclidean>(rep_); }
  bool is_finite() const { return !is_euclidean(); }

  const std::vector<double>& coords() const;
  std::size_t dim() const { return coords().size(); }

  std::size_t index() const;
  std::size_t cardinality() const;

  bool operator==(const Point& other) const;
  bool operator!=(const Point& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  struct Euclidean {
    std::vector<double> coords;
  };
  struct Finite {
    std::size_t index;
    std::size_t cardinality;
  };
  explicit Point(Euclidean e) : rep_(std::move(e)) {}
  explicit Point(Finite f) : rep_(f) {}

  std::variant<Euclidean, Finite> rep_;
};

}  // namespace ask
