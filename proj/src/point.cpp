#include "ask/point.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ask/errors.hpp"

namespace ask {

Point Point::euclidean(std::vector<double> coords) {
  if (coords.empty()) throw config_error("Point: empty coordinate vector");
  for (double c : coords) {
    if (!std::isfinite(c)) throw config_error("Point: non-finite coordinate");
  }
  return Point(Euclidean{std::move(coords)});
}

Point Point::finite(std::size_t index, std::size_t cardinality) {
  if (cardinality == 0) throw config_error("Point: finite space has cardinality 0");
  if (index >= cardinality) {
    throw config_error("Point: index " + std::to_string(index) +
                       " out of range for space of size " + std::to_string(cardinality));
  }
  return Point(Finite{index, cardinality});
}

const std::vector<double>& Point::coords() const {
  if (!is_euclidean()) throw std::logic_error("Point: coords() on a finite-space point");
  return std::get<Euclidean>(rep_).coords;
}

std::size_t Point::index() const {
  if (!is_finite()) throw std::logic_error("Point: index() on a Euclidean point");
  return std::get<Finite>(rep_).index;
}

std::size_t Point::cardinality() const {
  if (!is_finite()) throw std::logic_error("Point: cardinality() on a Euclidean point");
  return std::get<Finite>(rep_).cardinality;
}

bool Point::operator==(const Point& other) const {
  if (is_euclidean() != other.is_euclidean()) return false;
  if (is_euclidean()) return coords() == other.coords();
  return index() == other.index() && cardinality() == other.cardinality();
}

std::string Point::describe() const {
  std::ostringstream os;
  if (is_finite()) {
    os << "#" << index();
  } else {
    os << "(";
    const auto& c = coords();
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
  }
  return os.str();
}

}  // namespace ask
