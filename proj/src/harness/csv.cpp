#include "bpr/harness/csv.hpp"

#include <cstdio>

namespace bpr {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& schema,
                     const std::string& header)
    : out_(path, std::ios::binary), path_(path) {
  if (!out_) throw IoError("cannot open for writing: " + path);
  out_ << "# " << schema << "\n" << header << "\n";
}

CsvWriter::~CsvWriter() = default;

void CsvWriter::row(const std::string& line) { out_ << line << "\n"; }

void CsvWriter::close() {
  out_.close();
  if (out_.fail()) throw IoError("write failed: " + path_);
}

}  // namespace bpr
