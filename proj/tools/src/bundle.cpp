// Copyright 2026 The mcd-forge Authors
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

#include "mcd/cli/bundle.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace mcd::cli {
namespace {

using nlohmann::json;

std::vector<std::vector<int>> vectors_to_ints(const std::vector<GFVector>& vs) {
  std::vector<std::vector<int>> out;
  for (const auto& v : vs) out.push_back(v.indices());
  return out;
}

json metadata_json(const DesignBundle& b) {
  json m;
  m["method"] = b.method;
  m["s"] = b.s;
  m["u"] = b.u;
  m["u1"] = b.u1;
  m["v"] = b.v ? json(*b.v) : json(nullptr);
  m["item"] = b.item;
  m["seed"] = b.seed;
  m["generators"] = b.generators;
  return m;
}

json provenance_json(const DesignBundle& b) {
  json p;
  p["construction"] = b.construction;
  p["z"] = b.z;
  p["x"] = b.x;
  p["generator_columns"] = b.generator_columns;
  p["b_indices"] = b.b_indices;
  p["notes"] = b.notes;
  return p;
}

json header_json(const DesignBundle& b) {
  json j;
  j["format_version"] = kFormatVersion;
  j["metadata"] = metadata_json(b);
  j["provenance"] = provenance_json(b);
  j["d1"] = json::object({{"strength", b.d1_strength}});
  j["d2"] = json::object();
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw MalformedFile(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

template <typename T>
T get(const json& obj, const char* key) {
  try {
    return field(obj, key).get<T>();
  } catch (const json::exception&) {
    throw MalformedFile(std::string("field \"") + key + "\" has the wrong type");
  }
}

// Parses everything except the two matrices.
DesignBundle read_header(const json& j) {
  if (get<int>(j, "format_version") != kFormatVersion)
    throw MalformedFile("unsupported format_version " + field(j, "format_version").dump());
  DesignBundle b;
  const json& m = field(j, "metadata");
  b.method = get<std::string>(m, "method");
  b.s = get<int>(m, "s");
  b.u = get<int>(m, "u");
  b.u1 = get<int>(m, "u1");
  if (!field(m, "v").is_null()) b.v = get<int>(m, "v");
  b.item = get<std::string>(m, "item");
  b.seed = get<std::string>(m, "seed");
  b.generators = get<std::string>(m, "generators");
  b.d1_strength = get<int>(field(j, "d1"), "strength");
  const json& p = field(j, "provenance");
  b.construction = get<std::string>(p, "construction");
  b.z = get<std::vector<std::vector<int>>>(p, "z");
  b.x = get<std::vector<std::vector<int>>>(p, "x");
  b.generator_columns = get<std::vector<std::vector<std::vector<int>>>>(p, "generator_columns");
  b.b_indices = get<std::vector<std::size_t>>(p, "b_indices");
  b.notes = get<std::vector<std::string>>(p, "notes");
  return b;
}

IntMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows, const char* name) {
  if (rows.empty()) throw MalformedFile(std::string(name) + " has no rows");
  for (const auto& r : rows)
    if (r.size() != rows.front().size() || r.empty())
      throw MalformedFile(std::string(name) + " rows have inconsistent lengths");
  return IntMatrix::from_rows(rows);
}

void check_shapes(const DesignBundle& b) {
  if (b.d1.rows() != b.d2.rows())
    throw MalformedFile("D1 has " + std::to_string(b.d1.rows()) + " rows but D2 has " +
                        std::to_string(b.d2.rows()));
}

int parse_int(std::string_view cell, std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw MalformedFile("line " + std::to_string(line) + ": \"" + std::string(cell) +
                        "\" is not an integer");
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

DesignBundle bundle_from_design(const MarginallyCoupledDesign& design) {
  const ConstructionParams& p = design.params;
  DesignBundle b;
  b.method = std::string(method_name(p.method));
  b.s = p.s;
  b.u = p.u;
  b.u1 = p.u1;
  b.v = p.v;
  b.item = std::string(item_name(p.item));
  b.seed = p.seed.to_string();
  b.generators = std::string(generator_mode_name(p.generators));
  b.d1_strength = design.d1.certified_strength().value_or(0);
  b.d1 = design.d1.data();
  b.d2 = design.d2.data();
  b.construction = design.provenance.construction;
  b.z = vectors_to_ints(design.provenance.z);
  b.x = vectors_to_ints(design.provenance.x);
  for (const auto& g : design.provenance.generators) b.generator_columns.push_back(vectors_to_ints(g));
  b.b_indices = design.provenance.b_indices;
  b.notes = design.provenance.notes;
  return b;
}

std::string write_json(const DesignBundle& b) {
  json j = header_json(b);
  j["d1"]["rows"] = b.d1.to_rows();
  j["d2"]["rows"] = b.d2.to_rows();
  return dump(j);
}

DesignBundle read_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedFile(std::string("invalid JSON: ") + e.what());
  }
  DesignBundle b = read_header(j);
  b.d1 = matrix_from_rows(get<std::vector<std::vector<int>>>(field(j, "d1"), "rows"), "D1");
  b.d2 = matrix_from_rows(get<std::vector<std::vector<int>>>(field(j, "d2"), "rows"), "D2");
  check_shapes(b);
  return b;
}

std::pair<std::string, std::string> write_csv(const DesignBundle& b) {
  std::ostringstream csv;
  const std::size_t m = b.d1.cols();
  const std::size_t k = b.d2.cols();
  for (std::size_t j = 0; j < m; ++j) csv << (j ? "," : "") << 'q' << j + 1;
  for (std::size_t j = 0; j < k; ++j) csv << (m + j ? "," : "") << 'x' << j + 1;
  csv << '\n';
  for (std::size_t r = 0; r < b.d1.rows(); ++r) {
    for (std::size_t j = 0; j < m; ++j) csv << (j ? "," : "") << b.d1(r, j);
    for (std::size_t j = 0; j < k; ++j) csv << (m + j ? "," : "") << b.d2(r, j);
    csv << '\n';
  }
  json meta = header_json(b);
  meta["d1"]["columns"] = m;
  meta["d2"]["columns"] = k;
  return {csv.str(), dump(meta)};
}

DesignBundle read_csv(const std::string& csv, const std::string& meta) {
  json j;
  try {
    j = json::parse(meta);
  } catch (const json::parse_error& e) {
    throw MalformedFile(std::string("invalid sidecar JSON: ") + e.what());
  }
  DesignBundle b = read_header(j);
  const auto m = get<std::size_t>(field(j, "d1"), "columns");
  const auto k = get<std::size_t>(field(j, "d2"), "columns");

  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw MalformedFile("CSV is empty");
  const auto header = split(line);
  if (header.size() != m + k)
    throw MalformedFile("CSV header has " + std::to_string(header.size()) +
                        " columns, sidecar declares " + std::to_string(m + k));
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string want = (c < m ? "q" + std::to_string(c + 1) : "x" + std::to_string(c - m + 1));
    if (header[c] != want)
      throw MalformedFile("CSV header column " + std::to_string(c + 1) + " is \"" +
                          std::string(header[c]) + "\", expected \"" + want + "\"");
  }
  std::vector<std::vector<int>> d1_rows;
  std::vector<std::vector<int>> d2_rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != m + k)
      throw MalformedFile("line " + std::to_string(line_no) + " has " +
                          std::to_string(cells.size()) + " cells");
    std::vector<int> r1;
    std::vector<int> r2;
    for (std::size_t c = 0; c < cells.size(); ++c)
      (c < m ? r1 : r2).push_back(parse_int(cells[c], line_no));
    d1_rows.push_back(std::move(r1));
    d2_rows.push_back(std::move(r2));
  }
  b.d1 = matrix_from_rows(d1_rows, "D1");
  b.d2 = matrix_from_rows(d2_rows, "D2");
  check_shapes(b);
  return b;
}

std::string sidecar_path(const std::string& csv_path) {
  const std::size_t slash = csv_path.find_last_of('/');
  const std::size_t dot = csv_path.find_last_of('.');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? csv_path.substr(0, dot) : csv_path) + ".meta.json";
}

}  // namespace mcd::cli
