#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "bqha/types.hpp"

namespace bqha::harness {

// Comma-separated, header first, doubles as %.17g.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  CsvWriter& operator<<(const std::string& s);
  CsvWriter& operator<<(const char* s) { return *this << std::string(s); }
  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(int v);
  CsvWriter& operator<<(cplx v);  // two columns
  void end_row();

 private:
  void sep();
  std::ofstream out_;
  bool fresh_ = true;
};

}  // namespace bqha::harness
