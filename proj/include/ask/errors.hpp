#pragma once

#include <stdexcept>
#include <string>

namespace ask {

// Configuration / schema problems. The CLI maps these to exit code 2.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures (bracketing, divergence, non-finite objectives).
// The CLI maps these to exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ask
