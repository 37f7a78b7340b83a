#pragma once

#include <fstream>
#include <string>

#include "bpr/errors.hpp"

namespace bpr {

// Floats in CSV output carry 6 significant digits.
std::string format_number(double v);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& schema,
            const std::string& header);
  ~CsvWriter();

  void row(const std::string& line);
  void close();
  const std::string& path() const { return path_; }

 private:
  std::ofstream out_;
  std::string path_;
};

}  // namespace bpr
