// Copyright 2026 The uplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "uplab/cli.hpp"

namespace uplab::cli {

std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "table") return Format::table;
  return std::nullopt;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void render(const Report& r, Format f, std::ostream& out) {
  if (f == Format::json) {
    out << r.doc.dump(2) << '\n';
    return;
  }
  Json rows = r.rows.is_array() ? r.rows : Json::array({r.doc});
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (const auto& c : columns) line.push_back(row.contains(c) ? cell(row[c]) : "");
  }

  if (f == Format::csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
    out << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_escape(line[i]);
      out << '\n';
    }
    return;
  }

  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = columns[i].size();
    for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << (i ? "  " : "") << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size(), ' ');
    }
    out << '\n';
  };
  emit(columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : cells) emit(line);
}

}  // namespace uplab::cli
