#ifndef SAMPNET_CSV_HPP
#define SAMPNET_CSV_HPP

#include <cstddef>
#include <fstream>
#include <string>
#include <vector>

namespace sampnet::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // File line number of data row i (header is line 1).
  std::size_t line_of(std::size_t row) const { return row + 2; }
};

// Parses an RFC-4180-style CSV (quoted fields, "" escapes, embedded
// newlines). Throws ValidationError if the header does not match
// `expected_header` exactly or a row has the wrong field count.
Table read_csv(const std::string& path,
               const std::vector<std::string>& expected_header);

// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);

// Quotes a field only when it contains a comma, quote, or newline.
std::string escape_field(const std::string& field);

class Writer {
 public:
  explicit Writer(const std::string& path);
  void write_row(const std::vector<std::string>& fields);
  bool good() const { return out_.good(); }

 private:
  std::ofstream out_;
};

}  // namespace sampnet::csv

#endif  // SAMPNET_CSV_HPP
