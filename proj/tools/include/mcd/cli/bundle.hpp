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

#ifndef MCD_CLI_BUNDLE_HPP_
#define MCD_CLI_BUNDLE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcd/construct.hpp"
#include "mcd/int_matrix.hpp"

namespace mcd::cli {

inline constexpr int kFormatVersion = 1;

/// Raised for files that do not follow the bundle schema.
class MalformedFile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A design as stored on disk. Levels and vector entries are element
/// indices; nothing field-specific is serialized.
struct DesignBundle {
  std::string method;
  int s = 0;
  int u = 0;
  int u1 = 0;
  std::optional<int> v;
  std::string item;
  std::string seed;
  std::string generators;
  int d1_strength = 0;
  IntMatrix d1;
  IntMatrix d2;
  std::string construction;
  std::vector<std::vector<int>> z;
  std::vector<std::vector<int>> x;
  std::vector<std::vector<std::vector<int>>> generator_columns;
  std::vector<std::size_t> b_indices;
  std::vector<std::string> notes;

  friend bool operator==(const DesignBundle&, const DesignBundle&) = default;
};

DesignBundle bundle_from_design(const MarginallyCoupledDesign& design);

/// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string write_json(const DesignBundle& b);
/// Throws MalformedFile.
DesignBundle read_json(const std::string& text);

/// CSV body with header q1..qm,x1..xk and the metadata sidecar (the JSON
/// bundle without the matrices).
std::pair<std::string, std::string> write_csv(const DesignBundle& b);
/// Throws MalformedFile.
DesignBundle read_csv(const std::string& csv, const std::string& meta);

/// "d.csv" -> "d.meta.json".
std::string sidecar_path(const std::string& csv_path);

}  // namespace mcd::cli

#endif  // MCD_CLI_BUNDLE_HPP_
