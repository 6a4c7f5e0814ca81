#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pressmatch/error.hpp"

namespace pressmatch::csv {

using Row = std::vector<std::string>;

// RFC 4180 reader: quoted fields may contain separators, doubled quotes and
// line breaks. Blank lines are skipped. A quote left open at end of input
// is an error.
inline std::vector<Row> parse(std::string_view text, char sep = ',') {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(std::move(row));
    row.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
    } else if (c == sep) {
      end_field();
    } else if (c == '\n') {
      end_row();
    } else if (c == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      end_row();
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) throw IoError("csv: unterminated quoted field");
  if (field_started || !row.empty()) end_row();
  return rows;
}

inline std::string quote(std::string_view field, char sep = ',') {
  const bool needs = field.find_first_of(std::string{sep, '"', '\n', '\r'}) != std::string_view::npos;
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string format_row(const Row& row, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += sep;
    out += quote(row[i], sep);
  }
  out += '\n';
  return out;
}

// Header-addressed view over parsed rows.
class Table {
public:
  explicit Table(std::vector<Row> rows) {
    if (rows.empty()) return;
    header_ = std::move(rows.front());
    for (std::size_t i = 0; i < header_.size(); ++i) index_[header_[i]] = i;
    rows.erase(rows.begin());
    rows_ = std::move(rows);
  }

  static Table from_text(std::string_view text, char sep = ',') { return Table(parse(text, sep)); }

  bool empty() const { return header_.empty(); }
  bool has(const std::string& column) const { return index_.count(column) > 0; }
  const Row& header() const { return header_; }
  const std::vector<Row>& rows() const { return rows_; }

  std::optional<std::size_t> column(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void require(const std::vector<std::string>& columns) const {
    for (const auto& c : columns)
      if (!has(c)) throw IoError("csv: missing required column '" + c + "'");
  }

  // Cell text, or empty when the row is short.
  std::string_view cell(const Row& row, const std::string& name) const {
    auto idx = column(name);
    if (!idx || *idx >= row.size()) return {};
    return row[*idx];
  }

private:
  Row header_;
  std::map<std::string, std::size_t> index_;
  std::vector<Row> rows_;
};

}  // namespace pressmatch::csv
