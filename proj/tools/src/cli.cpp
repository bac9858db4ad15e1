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

#include "mcd/cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcd/catalog.hpp"
#include "mcd/cli/bundle.hpp"
#include "mcd/construct.hpp"
#include "mcd/error.hpp"
#include "mcd/gf.hpp"
#include "mcd/verify.hpp"

namespace mcd::cli {
namespace {

using nlohmann::json;

// Parameter problems found by the CLI itself, reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedFile("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("failed writing " + path);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

GFVector parse_vector(const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoi(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::logic_error&) {
      throw UsageError("bad vector entry \"" + cell + "\" in \"" + text + "\"");
    }
    if (entries.back() < 0 || entries.back() >= Field::kMaxOrder)
      throw UsageError("vector entry out of range in \"" + text + "\"");
  }
  if (entries.empty()) throw UsageError("empty vector");
  return GFVector::of(std::span<const int>(entries));
}

// "J=c1;c2;..." with J the 1-based x index.
std::pair<std::size_t, std::vector<GFVector>> parse_generator(const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("--gen expects J=col;col;..., got \"" + text + "\"");
  int j = 0;
  try {
    j = std::stoi(text.substr(0, eq));
  } catch (const std::logic_error&) {
    throw UsageError("bad x index in --gen \"" + text + "\"");
  }
  if (j < 1) throw UsageError("--gen x index is 1-based");
  std::vector<GFVector> cols;
  std::stringstream ss(text.substr(eq + 1));
  std::string col;
  while (std::getline(ss, col, ';')) cols.push_back(parse_vector(col));
  return {static_cast<std::size_t>(j - 1), std::move(cols)};
}

Seed resolve_seed(const std::optional<std::string>& flag) {
  std::optional<std::string> text = flag;
  if (!text)
    if (const char* env = std::getenv("MCD_FORGE_SEED"); env && *env) text = env;
  if (!text) return Seed::identity();
  if (auto seed = Seed::parse(*text)) return *seed;
  throw UsageError("seed must be \"identity\" or a non-negative integer, got \"" + *text + "\"");
}

DesignBundle load_bundle(const std::string& path) {
  if (ends_with(path, ".csv")) return read_csv(read_file(path), read_file(sidecar_path(path)));
  return read_json(read_file(path));
}

struct VerifyOptions {
  std::optional<int> strength;
  std::optional<std::vector<int>> cells;
};

VerificationReport verify_bundle(const DesignBundle& b, const VerifyOptions& opt) {
  const Field f = Field::create(b.s);
  std::int64_t n = 1;
  for (int i = 0; i < b.u; ++i) n *= f.order();
  if (static_cast<std::int64_t>(b.d1.rows()) != n)
    throw MalformedFile("matrices have " + std::to_string(b.d1.rows()) + " rows, expected s^u = " +
                        std::to_string(n));
  VerificationReport report = check_mcd(b.d1, b.d2, b.s);
  IntMatrix collapsed(b.d2.rows(), b.d2.cols());
  for (std::size_t r = 0; r < b.d2.rows(); ++r)
    for (std::size_t c = 0; c < b.d2.cols(); ++c) collapsed(r, c) = b.d2(r, c) / b.s;
  report.merge(check_noncascading(collapsed));
  if (opt.strength) {
    const std::vector<int> levels(b.d1.cols(), b.s);
    report.merge(check_oa_strength(b.d1, levels, *opt.strength));
  }
  if (opt.cells) report.merge(check_all_projections(b.d2, static_cast<int>(n), *opt.cells));
  return report;
}

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> cells;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    try {
      std::size_t used = 0;
      cells.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw UsageError("--stratify expects a grid like 2x2x2, got \"" + text + "\"");
    }
  }
  if (cells.empty()) throw UsageError("--stratify needs at least one dimension");
  return cells;
}

std::string columns_text(const std::vector<std::size_t>& cols) {
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + std::to_string(cols[i] + 1);
  return out;
}

void print_report(const VerificationReport& report, bool as_json, std::ostream& out) {
  if (as_json) {
    json j;
    j["passed"] = report.passed();
    j["checks"] = json::array();
    for (const auto& c : report.checks())
      j["checks"].push_back({{"name", c.name},
                             {"columns", c.columns},
                             {"passed", c.passed},
                             {"counterexample", c.counterexample}});
    out << j.dump(2) << '\n';
    return;
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks()) {
    if (c.passed) continue;
    ++failed;
    out << "FAIL " << c.name;
    if (!c.columns.empty()) out << " [" << columns_text(c.columns) << "]";
    out << ": " << c.counterexample << '\n';
  }
  out << report.checks().size() - failed << " checks passed, " << failed << " failed\n";
  out << (report.passed() ? "verification passed" : "verification FAILED") << '\n';
}

std::string design_summary(const DesignBundle& b) {
  return "OA(" + std::to_string(b.d1.rows()) + ", " + std::to_string(b.d1.cols()) + ", " +
         std::to_string(b.s) + ", " + std::to_string(b.d1_strength) + ") + LHD(" +
         std::to_string(b.d2.rows()) + ", " + std::to_string(b.d2.cols()) + ")";
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string method;
  std::optional<int> s;
  std::optional<int> u;
  std::optional<int> u1;
  std::optional<int> v;
  std::string item = "i";
  std::optional<std::string> seed;
  std::string generators = "canonical";
  std::vector<std::string> z;
  std::vector<std::string> x;
  std::vector<std::string> gen;
  std::vector<std::size_t> b_indices;
  std::string out;
  std::string format;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  ConstructionParams p;
  const auto method = parse_method(a.method);
  if (!method) throw UsageError("unknown method \"" + a.method + "\"");
  p.method = *method;
  const auto item = parse_item(a.item);
  if (!item) throw UsageError("--item must be i or ii");
  p.item = *item;
  const auto gen_mode = parse_generator_mode(a.generators);
  if (!gen_mode) throw UsageError("--generators must be canonical or stratified");
  p.generators = *gen_mode;
  p.seed = resolve_seed(a.seed);
  p.v = a.v;

  for (const auto& z : a.z) p.z_list.push_back(parse_vector(z));
  for (const auto& x : a.x) p.x_list.push_back(parse_vector(x));
  for (const auto& g : a.gen) {
    auto [j, cols] = parse_generator(g);
    p.generator_overrides[j] = std::move(cols);
  }
  if (!a.b_indices.empty()) p.b_indices = a.b_indices;

  if (p.method == Method::kAntiMirror) {
    p.s = a.s.value_or(2);
  } else {
    if (!a.s) throw UsageError("--s is required for method " + a.method);
    p.s = *a.s;
  }
  if (p.method == Method::kGeneral) {
    if (p.z_list.empty() || p.x_list.empty())
      throw UsageError("method general needs at least one --z and one --x");
    p.u = a.u.value_or(static_cast<int>(p.z_list.front().size()));
    p.u1 = a.u1.value_or(p.u);
  } else {
    if (!a.u || !a.u1) throw UsageError("--u and --u1 are required for method " + a.method);
    p.u = *a.u;
    p.u1 = *a.u1;
  }

  const MarginallyCoupledDesign design = construct(p);
  const DesignBundle bundle = bundle_from_design(design);

  const std::string format =
      !a.format.empty() ? a.format : (ends_with(a.out, ".csv") ? "csv" : "json");
  if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
  if (format == "csv" && a.out.empty()) throw UsageError("CSV output needs --out");

  std::string body;
  std::string meta;
  DesignBundle reread;
  if (format == "json") {
    body = write_json(bundle);
    reread = read_json(body);
  } else {
    std::tie(body, meta) = write_csv(bundle);
    reread = read_csv(body, meta);
  }
  const VerificationReport report = verify_bundle(reread, {});
  if (!report.passed() || !(reread == bundle)) {
    err << "internal error: constructed design failed verification\n";
    print_report(report, false, err);
    return kExitInternal;
  }

  if (a.out.empty()) {
    out << body;
    return kExitOk;
  }
  write_file(a.out, body);
  if (format == "csv") write_file(sidecar_path(a.out), meta);
  out << "wrote " << a.out << ": " << design_summary(bundle) << '\n';
  for (const auto& note : bundle.notes) out << "note: " << note << '\n';
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string in;
  std::optional<int> strength;
  std::string stratify;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const DesignBundle bundle = load_bundle(a.in);
  VerifyOptions opt;
  opt.strength = a.strength;
  if (!a.stratify.empty()) opt.cells = parse_grid(a.stratify);
  const VerificationReport report = verify_bundle(bundle, opt);
  print_report(report, a.json, out);
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

// --- catalog ---------------------------------------------------------------

struct CatalogArgs {
  int s = 3;
  int u_max = 5;
  int u_min = 2;
  std::string format = "md";
  std::string method = "all";
  bool materialize = false;
  std::optional<std::string> seed;
};

std::string oa_text(const CatalogRow& r) {
  return "OA(" + std::to_string(r.s) + "^" + std::to_string(r.u) + ", " +
         std::to_string(r.d1.m) + ", " + std::to_string(r.s) + ", " +
         std::to_string(r.d1.strength) + ")";
}

std::string lhd_text(const CatalogRow& r) {
  return "LHD(" + std::to_string(r.s) + "^" + std::to_string(r.u) + ", " +
         std::to_string(r.d2.k) + ")";
}

std::string v_text(const CatalogRow& r) {
  return r.v ? std::to_string(*r.v) + (r.is_max_v ? "*" : "") : "";
}

void print_markdown(const std::vector<CatalogRow>& t1, const std::vector<CatalogRow>& t2, int s,
                    int u_max, std::ostream& out) {
  if (!t1.empty()) {
    out << "## theorem1 (s = " << s << ")\n\n"
        << "| u | u1 | n_A | D1 (i) | D2 (i) | D1 (ii) | D2 (ii) |\n"
        << "|---|----|-----|--------|--------|---------|---------|\n";
    for (std::size_t i = 0; i + 1 < t1.size(); i += 2)
      out << "| " << t1[i].u << " | " << t1[i].u1 << " | " << t1[i].n_a << " | " << oa_text(t1[i])
          << " | " << lhd_text(t1[i]) << " | " << oa_text(t1[i + 1]) << " | "
          << lhd_text(t1[i + 1]) << " |\n";
    out << '\n';
  }
  if (!t2.empty()) {
    out << "## theorem2 (s = " << s << ")\n\n"
        << "| u | u1 | v | g(v) | u-u1 | k | D1 (i) | D2 (i) | D1 (ii) | D2 (ii) |\n"
        << "|---|----|---|------|------|---|--------|--------|---------|---------|\n";
    for (std::size_t i = 0; i + 1 < t2.size(); i += 2)
      out << "| " << t2[i].u << " | " << t2[i].u1 << " | " << v_text(t2[i]) << " | " << t2[i].g
          << " | " << t2[i].u_bar_1 << " | " << t2[i].d2.k << " | " << oa_text(t2[i]) << " | "
          << lhd_text(t2[i]) << " | " << oa_text(t2[i + 1]) << " | " << lhd_text(t2[i + 1])
          << " |\n";
    out << '\n';
    out << "## n* (s = " << s << ")\n\n"
        << "| u1 | n* | exact | v | g(v) | D1 (i) | D2 (i) | D1 (ii) | D2 (ii) |\n"
        << "|----|----|-------|---|------|--------|--------|---------|---------|\n";
    for (int u1 = 1; u1 <= u_max; ++u1) {
      const NStarSummary sum = nstar_summary(s, u1);
      if (sum.entries.empty()) {
        out << "| " << u1 << " | <= " << sum.n_star << " | no | | | | | | |\n";
        continue;
      }
      for (const auto& e : sum.entries)
        out << "| " << u1 << " | " << sum.n_star << " | yes | " << e.v << " | " << e.g << " | "
            << e.d1_item_i << " | " << e.d2_item_i << " | " << e.d1_item_ii << " | "
            << e.d2_item_ii << " |\n";
    }
  }
}

json row_json(const CatalogRow& r) {
  return {{"method", method_name(r.method)},
          {"s", r.s},
          {"u", r.u},
          {"u1", r.u1},
          {"v", r.v ? json(*r.v) : json(nullptr)},
          {"item", item_name(r.item)},
          {"d1", {{"n", r.d1.n}, {"m", r.d1.m}, {"s", r.d1.s}, {"strength", r.d1.strength}}},
          {"d2", {{"n", r.d2.n}, {"k", r.d2.k}}},
          {"is_max_v", r.is_max_v},
          {"u_bar_1", r.u_bar_1},
          {"n_a", r.n_a},
          {"g", r.g}};
}

void print_csv(const std::vector<CatalogRow>& rows, std::ostream& out) {
  out << "method,s,u,u1,v,item,n,m,strength,k,is_max_v,u_bar_1,n_a,g\n";
  for (const auto& r : rows)
    out << method_name(r.method) << ',' << r.s << ',' << r.u << ',' << r.u1 << ','
        << (r.v ? std::to_string(*r.v) : "") << ',' << item_name(r.item) << ',' << r.d1.n << ','
        << r.d1.m << ',' << r.d1.strength << ',' << r.d2.k << ',' << (r.is_max_v ? 1 : 0) << ','
        << r.u_bar_1 << ',' << r.n_a << ',' << r.g << '\n';
}

int cmd_catalog(const CatalogArgs& a, std::ostream& out, std::ostream& err) {
  if (a.method != "all" && a.method != "theorem1" && a.method != "theorem2")
    throw UsageError("--method must be theorem1, theorem2 or all");
  if (a.format != "md" && a.format != "csv" && a.format != "json")
    throw UsageError("--format must be md, csv or json");
  const Seed seed = resolve_seed(a.seed);
  std::vector<CatalogRow> t1;
  std::vector<CatalogRow> t2;
  if (a.method != "theorem2") t1 = enumerate_theorem1(a.s, a.u_max, a.u_min);
  if (a.method != "theorem1") t2 = enumerate_theorem2(a.s, a.u_max, a.u_min);
  std::vector<CatalogRow> all = t1;
  all.insert(all.end(), t2.begin(), t2.end());

  if (a.format == "md") {
    print_markdown(t1, t2, a.s, a.u_max, out);
  } else if (a.format == "csv") {
    print_csv(all, out);
  } else {
    json j = json::array();
    for (const auto& r : all) j.push_back(row_json(r));
    out << j.dump(2) << '\n';
  }

  if (!a.materialize) return kExitOk;
  std::size_t failures = 0;
  for (const auto& r : all) {
    const VerificationReport report = verify_row(r, materialize(r, seed));
    if (report.passed()) continue;
    ++failures;
    const CheckResult* f = report.first_failure();
    err << "FAIL " << method_name(r.method) << " u=" << r.u << " u1=" << r.u1
        << (r.v ? " v=" + std::to_string(*r.v) : "") << " item " << item_name(r.item) << ": "
        << f->name << ": " << f->counterexample << '\n';
  }
  err << "materialized " << all.size() << " rows, " << failures << " failed\n";
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify marginally coupled designs over GF(s)", "mcd_forge"};
  app.require_subcommand(1);

  ConstructArgs ca;
  CLI::App* construct_cmd = app.add_subcommand("construct", "Build a design and write it to disk");
  construct_cmd->add_option("--method", ca.method, "theorem1 | theorem2 | anti-mirror | general")
      ->required();
  construct_cmd->add_option("--s", ca.s, "Field order");
  construct_cmd->add_option("--u", ca.u, "Run exponent, n = s^u");
  construct_cmd->add_option("--u1", ca.u1, "Number of e vectors");
  construct_cmd->add_option("--v", ca.v, "theorem2: number of b vectors");
  construct_cmd->add_option("--item", ca.item, "i | ii");
  construct_cmd->add_option("--seed", ca.seed, "identity or an unsigned integer");
  construct_cmd->add_option("--generators", ca.generators, "canonical | stratified");
  construct_cmd->add_option("--z", ca.z, "general: a D1 generator vector, e.g. 1,2,0");
  construct_cmd->add_option("--x", ca.x, "general: a D2 vector, e.g. 1,2,0");
  construct_cmd->add_option("--gen", ca.gen, "G(x_J) override, J=col;col;... (J is 1-based)");
  construct_cmd->add_option("--b-indices", ca.b_indices, "theorem2: zero-based b indices")
      ->delimiter(',');
  construct_cmd->add_option("--out", ca.out, "Output path (stdout when omitted, JSON only)");
  construct_cmd->add_option("--format", ca.format, "json | csv (default from --out extension)");

  VerifyArgs va;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a stored design");
  verify_cmd->add_option("--in", va.in, "Design file (.json, or .csv with .meta.json sidecar)")
      ->required();
  verify_cmd->add_option("--strength", va.strength, "Also check D1 has this strength");
  verify_cmd->add_option("--stratify", va.stratify, "Also check D2 projections, e.g. 2x2x2");
  verify_cmd->add_flag("--json", va.json, "Machine-readable report");

  CatalogArgs cat;
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "List constructible designs");
  catalog_cmd->add_option("--s", cat.s, "Field order (<= 5)");
  catalog_cmd->add_option("--u-max", cat.u_max, "Largest u (<= 6)");
  catalog_cmd->add_option("--u-min", cat.u_min, "Smallest u");
  catalog_cmd->add_option("--format", cat.format, "md | csv | json");
  catalog_cmd->add_option("--method", cat.method, "theorem1 | theorem2 | all");
  catalog_cmd->add_flag("--materialize", cat.materialize, "Build and verify every row");
  catalog_cmd->add_option("--seed", cat.seed, "Seed used with --materialize");

  std::vector<std::string> argv_store{"mcd_forge"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (construct_cmd->parsed()) return cmd_construct(ca, out, err);
    if (verify_cmd->parsed()) return cmd_verify(va, out);
    return cmd_catalog(cat, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const MalformedFile& e) {
    err << "error: malformed design file: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::kVerificationFailed ? kExitInternal : kExitBadInput;
  }
}

}  // namespace mcd::cli
