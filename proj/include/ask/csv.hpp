#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace ask {

// "%.17g" with '.' decimal separator; round-trips doubles exactly and keeps
// repeated runs byte-identical
std::string format_double(double x);

// Minimal CSV emitter: header line, '\n' rows, no quoting (all fields are
// numbers or plain identifiers here).
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void row(const std::vector<std::string>& fields);
  void close();

 private:
  std::ofstream out_;
  std::size_t columns_;
};

}  // namespace ask
