#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rangekit/error.hpp"
#include "rangekit/grid.hpp"

namespace rangekit {

namespace {

const char* kColumns[] = {"species_id", "latitude", "longitude", "class",
                          "order",      "family",   "genus",     "species"};
constexpr std::size_t kNumColumns = 8;

// Splits one CSV line. Supports double-quoted fields with embedded commas
// and "" escapes. Returns false on unbalanced quotes.
bool split_csv(std::string_view line, std::vector<std::string>& out) {
  out.clear();
  std::string field;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (in_quotes) return false;
  out.push_back(std::move(field));
  return true;
}

std::string trim_copy(std::string s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_coord(const std::string& text, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(text, &pos);
    return pos == text.size() && std::isfinite(out);
  } catch (...) {
    return false;
  }
}

} // namespace

OccurrenceLoadResult parse_occurrences(std::string_view text) {
  OccurrenceLoadResult result;
  std::size_t pos = 0, line_no = 0;
  std::vector<std::string> fields;
  bool saw_header = false;

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    if (!saw_header) {
      if (!split_csv(line, fields))
        throw InputError("occurrence CSV: unbalanced quotes in header");
      if (fields.size() != kNumColumns) {
        throw InputError("occurrence CSV: header has " +
                         std::to_string(fields.size()) + " columns, expected " +
                         std::to_string(kNumColumns));
      }
      for (std::size_t i = 0; i < kNumColumns; ++i) {
        if (trim_copy(fields[i]) != kColumns[i])
          throw InputError(std::string("occurrence CSV: missing or misplaced "
                                       "column '") +
                           kColumns[i] + "' (found '" + fields[i] + "')");
      }
      saw_header = true;
      continue;
    }

    if (!split_csv(line, fields)) {
      result.rejects.push_back({line_no, "unbalanced quotes"});
      continue;
    }
    if (fields.size() != kNumColumns) {
      result.rejects.push_back(
          {line_no, "expected " + std::to_string(kNumColumns) +
                        " fields, got " + std::to_string(fields.size())});
      continue;
    }

    OccurrenceRecord rec;
    rec.species_id = trim_copy(fields[0]);
    if (rec.species_id.empty()) {
      result.rejects.push_back({line_no, "empty species_id"});
      continue;
    }
    if (!parse_coord(trim_copy(fields[1]), rec.latitude)) {
      result.rejects.push_back({line_no, "unparseable latitude"});
      continue;
    }
    if (!parse_coord(trim_copy(fields[2]), rec.longitude)) {
      result.rejects.push_back({line_no, "unparseable longitude"});
      continue;
    }
    if (rec.latitude < -90.0 || rec.latitude > 90.0) {
      result.rejects.push_back({line_no, "latitude out of range"});
      continue;
    }
    if (rec.longitude < -180.0 || rec.longitude >= 180.0) {
      result.rejects.push_back({line_no, "longitude out of range"});
      continue;
    }
    rec.rank_labels["class"] = trim_copy(fields[3]);
    rec.rank_labels["order"] = trim_copy(fields[4]);
    rec.rank_labels["family"] = trim_copy(fields[5]);
    rec.rank_labels["genus"] = trim_copy(fields[6]);
    rec.rank_labels["species"] = trim_copy(fields[7]);
    if (rec.rank_labels["species"].empty()) {
      result.rejects.push_back({line_no, "empty species label"});
      continue;
    }
    result.records.push_back(std::move(rec));
  }

  if (!saw_header)
    throw InputError("occurrence CSV: file is empty (header required)");
  return result;
}

OccurrenceLoadResult load_occurrences(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open occurrence file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_occurrences(buf.str());
}

} // namespace rangekit
