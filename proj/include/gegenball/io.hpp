#pragma once

#include <string>
#include <vector>

namespace gegenball::io {

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double v);

/// Minimal CSV builder: header row first, '\n' line endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  CsvWriter& row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  std::size_t columns_;
  std::string out_;
};

}  // namespace gegenball::io
