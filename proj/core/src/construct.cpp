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

#include "mcd/construct.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

#include "mcd/bstar.hpp"
#include "mcd/error.hpp"
#include "mcd/linalg.hpp"
#include "mcd/subspace.hpp"
#include "mcd/verify.hpp"

namespace mcd {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 4> kMethodNames{{
    {Method::kGeneral, "general"},
    {Method::kTheorem1, "theorem1"},
    {Method::kTheorem2, "theorem2"},
    {Method::kAntiMirror, "anti-mirror"},
}};

std::string label(char prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

void validate_vectors(const Field& f, int u, const std::vector<GFVector>& z,
                      const std::vector<GFVector>& x) {
  if (z.empty() || x.empty())
    throw Error(Errc::kBadParams, "at least one z and one x vector are required");
  auto check_list = [&](const std::vector<GFVector>& list, char prefix) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].size() != static_cast<std::size_t>(u))
        throw Error(Errc::kDimensionMismatch, label(prefix, i) + " has length " +
                                                  std::to_string(list[i].size()) +
                                                  ", expected u = " + std::to_string(u));
      for (GFElement e : list[i])
        if (!f.valid(e))
          throw Error(Errc::kLevelOutOfRange,
                      label(prefix, i) + " has an entry outside GF(" +
                          std::to_string(f.order()) + ")");
      if (list[i].is_zero()) throw Error(Errc::kZeroVector, label(prefix, i) + " is zero");
    }
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (proportional(f, list[i], list[j]))
          throw Error(Errc::kProportionalVectors,
                      label(prefix, i) + "=" + list[i].to_string() + " and " + label(prefix, j) +
                          "=" + list[j].to_string() + " are proportional");
  };
  check_list(z, 'z');
  check_list(x, 'x');
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (dot(f, z[i], x[j]).is_zero())
        throw Error(Errc::kOrthogonalityViolation,
                    label('z', i) + "=" + z[i].to_string() + " lies in O(" + label('x', j) +
                        "), x" + std::to_string(j + 1) + "=" + x[j].to_string());
}

std::vector<GFVector> validated_override(const Field& f, const GFVector& x,
                                         const std::vector<GFVector>& gen, std::size_t j) {
  const std::size_t want = x.size() - 1;
  if (gen.size() != want)
    throw Error(Errc::kBadParams, "generator override for " + label('x', j) + " has " +
                                      std::to_string(gen.size()) + " columns, expected " +
                                      std::to_string(want));
  for (const auto& g : gen) {
    if (g.size() != x.size())
      throw Error(Errc::kBadParams,
                  "generator override for " + label('x', j) + " has a column of wrong length");
    if (!dot(f, g, x).is_zero())
      throw Error(Errc::kBadParams, "generator column " + g.to_string() + " is not in O(" +
                                        label('x', j) + ")");
  }
  if (rank(f, gen) != static_cast<int>(want))
    throw Error(Errc::kBadParams,
                "generator override for " + label('x', j) + " is not linearly independent");
  return gen;
}

// Options for the shared assembly step that differ between methods.
struct Assembly {
  std::vector<std::optional<GFVector>> first_columns;  // forced G(x_j) leading column
  bool check_triples = false;
};

MarginallyCoupledDesign assemble(const Field& f, ConstructionParams params, Provenance prov,
                                 const Assembly& options = {}) {
  const int s = f.order();
  const int u = params.u;
  validate_vectors(f, u, prov.z, prov.x);
  for (const auto& [j, gen] : params.generator_overrides)
    if (j >= prov.x.size())
      throw Error(Errc::kBadParams, "generator override for x" + std::to_string(j + 1) +
                                        " but only " + std::to_string(prov.x.size()) +
                                        " x vectors");

  std::vector<std::vector<GFVector>> stratified;
  if (params.generators == GeneratorMode::kStratified)
    stratified = stratified_generator_choice(f, prov.x);

  prov.generators.clear();
  std::vector<std::vector<int>> d_columns;
  for (std::size_t j = 0; j < prov.x.size(); ++j) {
    const GFVector& x = prov.x[j];
    std::vector<GFVector> gen;
    if (auto it = params.generator_overrides.find(j); it != params.generator_overrides.end()) {
      gen = validated_override(f, x, it->second, j);
    } else if (!stratified.empty()) {
      gen = stratified[j];
    } else {
      std::vector<GFVector> canonical = orthogonal_complement_basis(f, x).vectors;
      if (j < options.first_columns.size() && options.first_columns[j])
        gen = complete_basis(f, {*options.first_columns[j]}, canonical,
                             static_cast<std::size_t>(u - 1));
      else
        gen = std::move(canonical);
    }
    IntMatrix a = generate_linear_array(f, GFMatrix::from_columns(gen));
    d_columns.push_back(method_of_replacement(a, s));
    prov.generators.push_back(std::move(gen));
  }

  const int strength = linear_strength(f, prov.z, u);
  OrthogonalArray d1 =
      OrthogonalArray::uniform(generate_linear_array(f, GFMatrix::from_columns(prov.z)), s,
                               strength);
  CollapsedDesign t_tilde(IntMatrix::from_columns(d_columns), s);
  LatinHypercube d2 = expand_levels(t_tilde, params.seed);

  VerificationReport report = check_mcd(d1, d2, s);
  report.merge(check_noncascading(t_tilde));
  const int n = static_cast<int>(d2.runs());
  if (params.generators == GeneratorMode::kStratified && d2.factors() >= 2) {
    const std::array<int, 2> cells{s, s};
    report.merge(check_all_projections(d2.data(), n, cells));
  }
  if (options.check_triples && d2.factors() >= 3) {
    const std::array<int, 3> cells{2, 2, 2};
    report.merge(check_all_projections(d2.data(), n, cells));
  }
  if (const CheckResult* failure = report.first_failure())
    throw Error(Errc::kVerificationFailed,
                failure->name + " failed after construction: " + failure->counterexample);

  return MarginallyCoupledDesign{std::move(d1), std::move(d2), std::move(t_tilde),
                                 std::move(params), std::move(prov)};
}

void require_u_range(int u, int u1) {
  if (u < 1 || u1 < 1 || u1 > u)
    throw Error(Errc::kBadParams, "need 1 <= u1 <= u, got u=" + std::to_string(u) +
                                      " u1=" + std::to_string(u1));
}

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) {
  for (const auto& [method, name] : kMethodNames)
    if (name == text) return method;
  return std::nullopt;
}

std::string_view item_name(Item i) { return i == Item::kI ? "i" : "ii"; }

std::optional<Item> parse_item(std::string_view text) {
  if (text == "i") return Item::kI;
  if (text == "ii") return Item::kII;
  return std::nullopt;
}

std::string_view generator_mode_name(GeneratorMode g) {
  return g == GeneratorMode::kCanonical ? "canonical" : "stratified";
}

std::optional<GeneratorMode> parse_generator_mode(std::string_view text) {
  if (text == "canonical") return GeneratorMode::kCanonical;
  if (text == "stratified") return GeneratorMode::kStratified;
  return std::nullopt;
}

MarginallyCoupledDesign general_construction(const ConstructionParams& params) {
  const Field f = Field::create(params.s);
  Provenance prov;
  prov.construction = "general";
  prov.z = params.z_list;
  prov.x = params.x_list;
  ConstructionParams p = params;
  p.method = Method::kGeneral;
  return assemble(f, std::move(p), std::move(prov));
}

MarginallyCoupledDesign theorem1(const ConstructionParams& params) {
  require_u_range(params.u, params.u1);
  const Field f = Field::create(params.s);
  std::vector<GFVector> e;
  for (int i = 0; i < params.u1; ++i)
    e.push_back(GFVector::unit(static_cast<std::size_t>(params.u), static_cast<std::size_t>(i)));
  std::vector<GFVector> a = build_A(f, params.u, params.u1).vectors;

  Provenance prov;
  prov.construction = "theorem1";
  if (params.item == Item::kI) {
    prov.z = std::move(e);
    prov.x = std::move(a);
  } else {
    prov.z = std::move(a);
    prov.x = std::move(e);
  }
  ConstructionParams p = params;
  p.method = Method::kTheorem1;
  p.v.reset();
  return assemble(f, std::move(p), std::move(prov));
}

MarginallyCoupledDesign theorem2(const ConstructionParams& params) {
  require_u_range(params.u, params.u1);
  const Field f = Field::create(params.s);
  const PartitionedA part = partition_A(build_A(f, params.u, params.u1));

  Provenance prov;
  prov.construction = "theorem2";
  std::vector<std::size_t> indices;
  if (params.b_indices) {
    indices = *params.b_indices;
    if (params.v && *params.v != static_cast<int>(indices.size()))
      throw Error(Errc::kVOutOfRange, "v = " + std::to_string(*params.v) + " but " +
                                          std::to_string(indices.size()) +
                                          " b indices were given");
  } else {
    if (!params.v) throw Error(Errc::kBadParams, "theorem2 requires v");
    const BStarResult bstar = find_bstar(f, params.u1);
    const int v = *params.v;
    if (v < 1 || v > bstar.n_star)
      throw Error(Errc::kVOutOfRange, "v must be in 1.." + std::to_string(bstar.n_star) +
                                          ", got " + std::to_string(v));
    indices.assign(bstar.indices.begin(), bstar.indices.begin() + v);
    if (!bstar.provably_maximal)
      prov.notes.push_back("B* search stopped on its budget; n* = " +
                           std::to_string(bstar.n_star) + " is maximal within search only");
  }

  const EBarIntersection inter = intersect_Ebar(f, part, indices);
  if (!inter.hypothesis_holds)
    prov.notes.push_back("chosen b vectors are not u1-wise independent; the f(v) count is "
                         "advisory");
  else if (!inter.formula_matches)
    prov.notes.push_back("intersection size " + std::to_string(inter.f_v) +
                         " differs from the closed form " + std::to_string(inter.formula_f));

  std::vector<GFVector> a_star;
  for (std::size_t i : indices)
    a_star.insert(a_star.end(), part.groups[i].begin(), part.groups[i].end());

  if (params.item == Item::kI) {
    prov.z = inter.e_star;
    prov.x = std::move(a_star);
  } else {
    prov.z = std::move(a_star);
    prov.x = inter.e_star;
  }
  prov.b_indices = indices;

  ConstructionParams p = params;
  p.method = Method::kTheorem2;
  p.v = static_cast<int>(indices.size());
  return assemble(f, std::move(p), std::move(prov));
}

MarginallyCoupledDesign anti_mirror_construction(int u, int u1, Seed seed) {
  if (u1 < 2 || u1 > u - 1)
    throw Error(Errc::kBadParams, "anti-mirror arrangement needs 2 <= u1 <= u - 1, got u=" +
                                      std::to_string(u) + " u1=" + std::to_string(u1));
  const Field f = Field::create(2);
  const PartitionedA part = partition_A(build_A(f, u, u1));
  const std::array<std::size_t, 1> first{0};

  Provenance prov;
  prov.construction = "anti-mirror";
  prov.z = intersect_Ebar(f, part, first).e_star;
  prov.b_indices = {0};

  Assembly options;
  for (const auto& y : enumerate_tuples(f, u - u1)) {
    GFVector x(static_cast<std::size_t>(u));
    GFVector eta(static_cast<std::size_t>(u));
    const GFVector y_bar = anti_mirror(y);
    for (int i = 0; i < u1; ++i) x[i] = f.one();
    eta[0] = f.one();
    eta[1] = f.one();
    for (int i = 0; i < u - u1; ++i) {
      x[u1 + i] = y[i];
      eta[u1 + i] = y_bar[i];
    }
    prov.x.push_back(std::move(x));
    options.first_columns.emplace_back(std::move(eta));
  }
  options.check_triples = u1 < u - 1;
  if (!options.check_triples)
    prov.notes.push_back("u1 = u - 1 leaves two D2 columns; the 2x2x2 stratification "
                         "guarantee is vacuous");

  ConstructionParams p;
  p.method = Method::kAntiMirror;
  p.s = 2;
  p.u = u;
  p.u1 = u1;
  p.v = 1;
  p.item = Item::kI;
  p.seed = seed;
  return assemble(f, std::move(p), std::move(prov), options);
}

MarginallyCoupledDesign construct(const ConstructionParams& params) {
  switch (params.method) {
    case Method::kGeneral:
      return general_construction(params);
    case Method::kTheorem1:
      return theorem1(params);
    case Method::kTheorem2:
      return theorem2(params);
    case Method::kAntiMirror:
      if (params.s != 2)
        throw Error(Errc::kBadParams, "anti-mirror arrangement requires s = 2");
      return anti_mirror_construction(params.u, params.u1, params.seed);
  }
  throw Error(Errc::kBadParams, "unknown method");
}

std::vector<std::vector<GFVector>> stratified_generator_choice(
    const Field& f, const std::vector<GFVector>& x_list) {
  if (x_list.empty()) return {};
  const int u = static_cast<int>(x_list.front().size());
  const int s = f.order();
  std::int64_t points = 0;
  for (int i = 0; i < u - 1; ++i) points = points * s + 1;
  if (static_cast<std::int64_t>(x_list.size()) > points)
    throw Error(Errc::kTooManyColumns,
                std::to_string(x_list.size()) + " columns exceed (s^(u-1)-1)/(s-1) = " +
                    std::to_string(points));

  std::vector<GFVector> candidates;
  for (auto& y : enumerate_tuples(f, u))
    if (!y.is_zero() && normalized(f, y) == y) candidates.push_back(std::move(y));

  std::set<GFVector> used;
  std::vector<std::vector<GFVector>> out;
  for (std::size_t j = 0; j < x_list.size(); ++j) {
    const GFVector& x = x_list[j];
    if (x.size() != static_cast<std::size_t>(u))
      throw Error(Errc::kDimensionMismatch, "x vectors have different lengths");
    auto it = std::find_if(candidates.begin(), candidates.end(), [&](const GFVector& y) {
      return dot(f, y, x).is_zero() && !used.count(y);
    });
    if (it == candidates.end())
      throw Error(Errc::kTooManyColumns,
                  "no unused direction left in O(" + label('x', j) + ")");
    used.insert(*it);
    out.push_back(complete_basis(f, {*it}, orthogonal_complement_basis(f, x).vectors,
                                 static_cast<std::size_t>(u - 1)));
  }
  return out;
}

GFVector proposition1_witness(const Field& f, int u, int u1, const GFVector& z) {
  if (f.order() == 2) throw Error(Errc::kNotApplicable, "the witness requires s > 2");
  require_u_range(u, u1);
  if (z.size() != static_cast<std::size_t>(u))
    throw Error(Errc::kDimensionMismatch, "z has length " + std::to_string(z.size()));
  for (int i = u1; i < u; ++i)
    if (!z[i].is_zero()) throw Error(Errc::kNotApplicable, "z is not in span{e_1..e_u1}");
  std::vector<std::size_t> support;
  for (int i = 0; i < u1; ++i)
    if (!z[i].is_zero()) support.push_back(static_cast<std::size_t>(i));
  if (support.size() < 2)
    throw Error(Errc::kNotApplicable, "z needs at least two nonzero coefficients");

  const std::size_t last = support.back();
  const std::size_t before_last = support[support.size() - 2];
  GFElement lambda_star = f.zero();
  for (std::size_t j = 0; j + 1 < support.size(); ++j) lambda_star = f.add(lambda_star, z[support[j]]);

  GFVector x(static_cast<std::size_t>(u));
  for (int i = 0; i < u; ++i) x[i] = f.one();
  const GFElement neg_inv_last = f.neg(f.inv(z[last]));
  if (!lambda_star.is_zero()) {
    x[last] = f.mul(neg_inv_last, lambda_star);
  } else {
    const GFElement alpha2 = f.element(2);
    x[before_last] = alpha2;
    x[last] = f.mul(neg_inv_last, f.mul(z[before_last], f.sub(alpha2, f.one())));
  }
  return x;
}

GFVector anti_mirror(const GFVector& v) {
  GFVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = GFElement(v[i].is_zero() ? 1 : 0);
  return out;
}

}  // namespace mcd
