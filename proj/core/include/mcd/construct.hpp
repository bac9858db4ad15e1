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

#ifndef MCD_CONSTRUCT_HPP_
#define MCD_CONSTRUCT_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcd/design.hpp"
#include "mcd/gf.hpp"
#include "mcd/seed.hpp"

namespace mcd {

enum class Method { kGeneral, kTheorem1, kTheorem2, kAntiMirror };

/// Which side receives the e-type vectors. Item i puts them in D1 (the z's),
/// item ii in D2 (the x's).
enum class Item { kI, kII };

/// How G(x) is chosen when no override is given: the canonical echelon basis
/// of O(x), or a basis whose first columns are pairwise non-proportional
/// across all x's (s x s stratification of every pair of D2 columns).
enum class GeneratorMode { kCanonical, kStratified };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view text);
std::string_view item_name(Item i);
std::optional<Item> parse_item(std::string_view text);
std::string_view generator_mode_name(GeneratorMode g);
std::optional<GeneratorMode> parse_generator_mode(std::string_view text);

struct ConstructionParams {
  Method method = Method::kTheorem1;
  int s = 2;
  int u = 2;
  int u1 = 1;
  std::optional<int> v;  ///< theorem2 only
  Item item = Item::kI;
  Seed seed = Seed::identity();
  GeneratorMode generators = GeneratorMode::kCanonical;
  /// Explicit G(x_j) columns keyed by zero-based x index.
  std::map<std::size_t, std::vector<GFVector>> generator_overrides;
  /// Inputs of the general method.
  std::vector<GFVector> z_list;
  std::vector<GFVector> x_list;
  /// theorem2: zero-based b indices to use instead of the first v of B*.
  std::optional<std::vector<std::size_t>> b_indices;
};

struct Provenance {
  std::string construction;
  std::vector<GFVector> z;
  std::vector<GFVector> x;
  std::vector<std::vector<GFVector>> generators;  ///< G(x_j), one per x
  std::vector<std::size_t> b_indices;
  std::vector<std::string> notes;
};

struct MarginallyCoupledDesign {
  OrthogonalArray d1;
  LatinHypercube d2;
  CollapsedDesign t_tilde;
  ConstructionParams params;
  Provenance provenance;
};

/// Steps 1-3 of the general construction over params.z_list and
/// params.x_list. Every z must satisfy z^T x != 0 for every x, and neither
/// list may contain a proportional pair. The result is verified with
/// check_mcd and check_noncascading before it is returned.
/// Throws Error{kOrthogonalityViolation}, Error{kProportionalVectors},
/// Error{kZeroVector}, Error{kBadParams}, or Error{kVerificationFailed}.
MarginallyCoupledDesign general_construction(const ConstructionParams& params);

/// e_1..e_u1 against the admissible set.
MarginallyCoupledDesign theorem1(const ConstructionParams& params);

/// E*_v against the union of the chosen groups of the admissible set.
/// Throws Error{kVOutOfRange} unless 1 <= v <= n*.
MarginallyCoupledDesign theorem2(const ConstructionParams& params);

/// s = 2 only. D2 columns come from x_i = (1_u1, y_i) with eta_i as the
/// first generator column; D1 is E*_1. Requires 2 <= u1 <= u - 1. The
/// 2 x 2 x 2 stratification is checked when u1 < u - 1 and noted as vacuous
/// at u1 = u - 1.
MarginallyCoupledDesign anti_mirror_construction(int u, int u1, Seed seed);

MarginallyCoupledDesign construct(const ConstructionParams& params);

/// One generator matrix per x. The first columns are greedily chosen as the
/// first normalized member of O(x_i), in enumerate_tuples order, that is not
/// proportional to an earlier choice; the rest completes the canonical basis.
/// Throws Error{kTooManyColumns} when |x_list| > (s^(u-1) - 1)/(s - 1).
std::vector<std::vector<GFVector>> stratified_generator_choice(
    const Field& f, const std::vector<GFVector>& x_list);

/// An x in the admissible set with z^T x = 0, following the constructive
/// argument: all entries 1 except x_{i_l} = -lambda_{i_l}^-1 lambda* when
/// lambda* != 0, otherwise x_{i_{l-1}} = alpha_2 and
/// x_{i_l} = -lambda_{i_l}^-1 lambda_{i_{l-1}} (alpha_2 - 1).
/// Throws Error{kNotApplicable} for s = 2, for z outside E, or when z has
/// fewer than two nonzero coefficients.
GFVector proposition1_witness(const Field& f, int u, int u1, const GFVector& z);

/// Entrywise 1 - v over GF(2).
GFVector anti_mirror(const GFVector& v);

}  // namespace mcd

#endif  // MCD_CONSTRUCT_HPP_
