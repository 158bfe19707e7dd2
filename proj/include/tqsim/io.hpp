#pragma once

#include <string>
#include <vector>

namespace tqsim {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_format(const CsvTable& table);
CsvTable csv_parse(const std::string& text);

// Shortest representation that round-trips a double exactly.
std::string format_double(double v);

}  // namespace tqsim
