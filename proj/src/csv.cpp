#include "sampnet/csv.hpp"

#include <charconv>
#include <sstream>

#include "sampnet/types.hpp"

namespace sampnet::csv {

namespace {

// Splits raw CSV text into records of fields. Tracks the line number on
// which each record starts so errors can name it.
struct RawRecord {
  std::vector<std::string> fields;
  std::size_t line;
};

std::vector<RawRecord> parse(const std::string& text) {
  std::vector<RawRecord> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_field = [&] {
    fields.push_back(field);
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    records.push_back({fields, record_line});
    fields.clear();
    record_line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r') {
      // swallow; \r\n handled by the \n branch
    } else if (c == '\n') {
      ++line;
      end_record();
    } else {
      field += c;
    }
  }
  // Final record without trailing newline.
  if (!field.empty() || !fields.empty()) end_record();
  return records;
}

}  // namespace

Table read_csv(const std::string& path,
               const std::vector<std::string>& expected_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  std::vector<RawRecord> records = parse(text);
  if (records.empty()) throw ValidationError(path + ": file is empty");

  Table table;
  table.header = records[0].fields;
  if (table.header != expected_header) {
    std::string want, got;
    for (const auto& h : expected_header) want += (want.empty() ? "" : ",") + h;
    for (const auto& h : table.header) got += (got.empty() ? "" : ",") + h;
    throw ValidationError(path + ": unexpected header '" + got +
                          "' (expected '" + want + "')");
  }

  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].fields.size() != expected_header.size()) {
      throw ValidationError(path + ", line " + std::to_string(records[i].line) +
                            ": expected " + std::to_string(expected_header.size()) +
                            " fields, got " + std::to_string(records[i].fields.size()));
    }
    table.rows.push_back(std::move(records[i].fields));
  }
  return table;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string escape_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

Writer::Writer(const std::string& path) : out_(path, std::ios::binary) {
  if (!out_) throw ValidationError("cannot open file for writing: " + path);
}

void Writer::write_row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << escape_field(fields[i]);
  }
  out_ << '\n';
}

}  // namespace sampnet::csv
