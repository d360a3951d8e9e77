// Copyright 2026 The strgraph Authors
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

/// \file
/// Experiment grids: instance descriptors, one report row per instance, CSV
/// persistence, and the invariant/bound verification pass over a report.
///
/// Every cell is text. Cells of analyses that were not requested or do not
/// apply read `NA`; analyses whose preconditions fail read `skipped:<why>`.
/// Numbers are printed with `%.10g`, so reruns reproduce files byte for byte.

#ifndef STRGRAPH_EXPERIMENT_HPP
#define STRGRAPH_EXPERIMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "json.hpp"
#include "strgraph/biclique.hpp"
#include "strgraph/bounds.hpp"
#include "strgraph/cliques.hpp"
#include "strgraph/curves.hpp"
#include "strgraph/decomposition.hpp"
#include "strgraph/drawings.hpp"
#include "strgraph/generators.hpp"
#include "strgraph/separators.hpp"

namespace strgraph {

inline constexpr const char* kToolVersion = "strgraph 1.0.0";

/// Bad configuration or input; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- instances ------------------------------------------------------------

/// Generator name plus the parameters it uses; unused parameters stay empty.
struct InstanceDescriptor {
  std::string generator;
  std::optional<std::uint64_t> n, m, rows, cols, span, length, seed;

  auto key() const { return std::tie(generator, n, m, rows, cols, span, length, seed); }
  friend bool operator<(const InstanceDescriptor& l, const InstanceDescriptor& r) {
    return l.key() < r.key();
  }
  friend bool operator==(const InstanceDescriptor& l, const InstanceDescriptor& r) {
    return l.key() == r.key();
  }
};

inline const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {
      "disjoint", "star",       "path",        "grid",        "cycle",
      "random-seg", "convex",   "random-draw", "random-plane"};
  return names;
}

inline bool is_drawing_generator(const std::string& name) {
  return name == "convex" || name == "random-draw" || name == "random-plane";
}

inline bool is_seeded_generator(const std::string& name) {
  return name == "random-seg" || name == "random-draw" || name == "random-plane";
}

/// A generated object: a curve family or a drawing, and its string graph.
struct Instance {
  InstanceDescriptor descriptor;
  std::variant<CurveFamily, Drawing> object;
  Graph graph;

  const Drawing* drawing() const { return std::get_if<Drawing>(&object); }
};

namespace detail {

inline std::uint64_t need(const std::optional<std::uint64_t>& v, const char* field,
                          const std::string& generator) {
  if (!v) throw ConfigError("generator '" + generator + "' needs '" + field + "'");
  return *v;
}

}  // namespace detail

/// Fills defaults (seed 1, span 8n for random segments) and drops parameters
/// the generator does not use.
inline InstanceDescriptor normalize(InstanceDescriptor d) {
  const auto& g = d.generator;
  if (std::find(generator_names().begin(), generator_names().end(), g) ==
      generator_names().end()) {
    throw ConfigError("unknown generator '" + g + "'");
  }
  const bool uses_n = g != "grid";
  if (!uses_n) d.n.reset();
  if (g != "random-draw" && g != "random-plane") d.m.reset();
  if (g != "grid") d.rows.reset(), d.cols.reset();
  if (g != "random-seg") d.length.reset();
  if (!is_seeded_generator(g)) {
    d.seed.reset();
    d.span.reset();
  } else if (!d.seed) {
    d.seed = 1;
  }
  if (g == "random-seg" && !d.span && d.n) d.span = 8 * *d.n;
  if (g == "random-seg" && !d.length) d.length = 0;
  if (g == "random-plane" && !d.m) d.m = 0;
  return d;
}

inline Instance materialize(const InstanceDescriptor& raw) {
  const InstanceDescriptor d = normalize(raw);
  const auto& g = d.generator;
  Instance out{d, CurveFamily{}, Graph{}};
  try {
    if (g == "grid") {
      out.object = grid_biclique(detail::need(d.rows, "rows", g), detail::need(d.cols, "cols", g));
    } else {
      const auto n = detail::need(d.n, "n", g);
      if (g == "disjoint") out.object = disjoint_segments(n);
      if (g == "star") out.object = pairwise_crossing_star(n);
      if (g == "path") out.object = interval_path(n);
      if (g == "cycle") out.object = polygon_cycle(n);
      if (g == "random-seg") out.object = random_segments(n, *d.span, Seed{*d.seed}, *d.length);
      if (g == "convex") out.object = convex_drawing(n);
      if (g == "random-draw") {
        out.object =
            random_drawing(n, detail::need(d.m, "m", g), Seed{*d.seed}, d.span.value_or(0));
      }
      if (g == "random-plane") {
        out.object = random_plane_drawing(n, Seed{*d.seed}, *d.m, d.span.value_or(0));
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (const auto* drawing = out.drawing()) {
    out.graph = build_edge_crossing_graph(*drawing);
  } else {
    out.graph = build_string_graph(std::get<CurveFamily>(out.object));
  }
  return out;
}

// ---- configuration ---------------------------------------------------------

inline const std::vector<std::string>& analysis_names() {
  static const std::vector<std::string> names = {
      "separate", "indep", "color", "kt-free", "biclique", "eh",
      "crossings", "quasiplanar", "crossing-pairs", "edge-bound"};
  return names;
}

struct ExperimentConfig {
  std::string name = "experiment";
  ParamSet params;
  std::size_t t = 3;
  double epsilon = 0.5;
  std::string separator = "spectral";  ///< exact | spectral | bfs
  std::string biclique = "auto";       ///< auto | exact | greedy
  double report_c = 1.0;               ///< exponent in t (log t)^c n
  std::vector<InstanceDescriptor> instances;
  std::set<std::string> analyses;

  bool wants(const std::string& analysis) const { return analyses.count(analysis) > 0; }
};

namespace detail {

inline std::vector<std::uint64_t> int_list(const nlohmann::json& grid, const char* key) {
  if (!grid.contains(key)) return {};
  const auto& v = grid.at(key);
  std::vector<std::uint64_t> out;
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(x.get<std::uint64_t>());
  } else {
    out.push_back(v.get<std::uint64_t>());
  }
  return out;
}

inline std::vector<std::optional<std::uint64_t>> axis(const nlohmann::json& grid,
                                                      const char* key) {
  auto values = int_list(grid, key);
  if (values.empty()) return {std::nullopt};
  return {values.begin(), values.end()};
}

}  // namespace detail

/// Parses the JSON experiment description:
///
///     {"name": "...", "params": {"d": 1, "b": 1, "C": 8, "base_case_n": 18},
///      "t": 3, "epsilon": 0.5, "separator": "spectral", "biclique": "auto",
///      "report_c": 1,
///      "grids": [{"generator": "random-seg", "n": [50, 100], "seeds": [1, 2],
///                 "span": 800, "length": 0, "m": ..., "rows": ..., "cols": ...}],
///      "analyses": ["separate", "indep", ...]}
///
/// Grid values may be a number or a list; the grid is their Cartesian product.
inline ExperimentConfig parse_experiment_config(const nlohmann::json& j) {
  ExperimentConfig c;
  try {
    c.name = j.value("name", c.name);
    if (j.contains("params")) {
      const auto& p = j.at("params");
      c.params.d = p.value("d", c.params.d);
      c.params.b = p.value("b", c.params.b);
      c.params.C = p.value("C", c.params.C);
      c.params.base_case_n = p.value("base_case_n", c.params.base_case_n);
    }
    c.t = j.value("t", c.t);
    c.epsilon = j.value("epsilon", c.epsilon);
    c.separator = j.value("separator", c.separator);
    c.biclique = j.value("biclique", c.biclique);
    c.report_c = j.value("report_c", c.report_c);
    for (const auto& a : j.at("analyses")) {
      const auto name = a.get<std::string>();
      if (std::find(analysis_names().begin(), analysis_names().end(), name) ==
          analysis_names().end()) {
        throw ConfigError("unknown analysis '" + name + "'");
      }
      c.analyses.insert(name);
    }
    std::set<InstanceDescriptor> unique;
    for (const auto& grid : j.at("grids")) {
      const auto generator = grid.at("generator").get<std::string>();
      for (auto n : detail::axis(grid, "n"))
        for (auto m : detail::axis(grid, "m"))
          for (auto rows : detail::axis(grid, "rows"))
            for (auto cols : detail::axis(grid, "cols"))
              for (auto span : detail::axis(grid, "span"))
                for (auto length : detail::axis(grid, "length"))
                  for (auto seed : detail::axis(grid, "seeds")) {
                    unique.insert(
                        normalize({generator, n, m, rows, cols, span, length, seed}));
                  }
    }
    c.instances.assign(unique.begin(), unique.end());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad experiment config: ") + e.what());
  }
  if (c.separator != "exact" && c.separator != "spectral" && c.separator != "bfs") {
    throw ConfigError("separator must be exact, spectral or bfs");
  }
  if (c.biclique != "auto" && c.biclique != "exact" && c.biclique != "greedy") {
    throw ConfigError("biclique must be auto, exact or greedy");
  }
  if (c.t < 2) throw ConfigError("t must be >= 2");
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
  try {
    c.params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

inline nlohmann::ordered_json config_to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["params"] = {{"d", c.params.d},
                 {"b", c.params.b},
                 {"C", c.params.C},
                 {"base_case_n", c.params.base_case_n}};
  j["t"] = c.t;
  j["epsilon"] = c.epsilon;
  j["separator"] = c.separator;
  j["biclique"] = c.biclique;
  j["report_c"] = c.report_c;
  j["analyses"] = std::vector<std::string>(c.analyses.begin(), c.analyses.end());
  auto grids = nlohmann::ordered_json::array();
  for (const auto& d : c.instances) {
    nlohmann::ordered_json g;
    g["generator"] = d.generator;
    auto put = [&](const char* key, const std::optional<std::uint64_t>& v) {
      if (v) g[key] = *v;
    };
    put("n", d.n);
    put("m", d.m);
    put("rows", d.rows);
    put("cols", d.cols);
    put("span", d.span);
    put("length", d.length);
    if (d.seed) g["seeds"] = *d.seed;
    grids.push_back(std::move(g));
  }
  j["grids"] = std::move(grids);
  return j;
}

// ---- report rows -------------------------------------------------------------

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> columns = {
      "generator", "n_param", "m_param", "rows", "cols", "span", "length", "seed",
      "objects", "drawing_edges", "vertices", "edges", "t",
      "sep_algo", "sep_size", "sep_valid", "sep_bound", "sep_ratio",
      "indep_size", "indep_target", "indep_valid",
      "colors", "color_bound", "color_proper", "kt_free",
      "biclique_method", "biclique_size", "biclique_valid", "biclique_target",
      "eh_branch", "eh_size", "eh_target", "eh_met", "eh_valid",
      "crossings", "crossing_ratio", "quasiplanar",
      "crossing_pairs", "crossing_pairs_valid",
      "edge_bound_per_vertex"};
  return columns;
}

inline constexpr const char* kNotApplicable = "NA";

inline std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", x);
  return buffer;
}

inline std::string format_optional(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string(kNotApplicable);
}

class ReportRow {
 public:
  ReportRow() : cells_(report_columns().size(), kNotApplicable) {}

  void set(const std::string& column, std::string value) {
    cells_.at(index(column)) = std::move(value);
  }
  void set(const std::string& column, std::size_t value) { set(column, std::to_string(value)); }
  void set(const std::string& column, double value) { set(column, format_number(value)); }
  void set(const std::string& column, bool value) {
    set(column, std::string(value ? "true" : "false"));
  }
  void set(const std::string& column, const char* value) { set(column, std::string(value)); }

  const std::string& get(const std::string& column) const { return cells_.at(index(column)); }
  const std::vector<std::string>& cells() const { return cells_; }
  std::vector<std::string>& cells() { return cells_; }

  bool available(const std::string& column) const {
    const auto& v = get(column);
    return v != kNotApplicable && v.rfind("skipped:", 0) != 0;
  }
  double number(const std::string& column) const { return std::stod(get(column)); }

  InstanceDescriptor descriptor() const {
    auto opt = [&](const char* c) -> std::optional<std::uint64_t> {
      if (!available(c)) return std::nullopt;
      return std::stoull(get(c));
    };
    return {get("generator"), opt("n_param"), opt("m_param"), opt("rows"), opt("cols"),
            opt("span"),      opt("length"),  opt("seed")};
  }

  friend bool operator==(const ReportRow&, const ReportRow&) = default;

 private:
  static std::size_t index(const std::string& column) {
    const auto& cols = report_columns();
    const auto it = std::find(cols.begin(), cols.end(), column);
    if (it == cols.end()) throw std::out_of_range("unknown report column " + column);
    return static_cast<std::size_t>(it - cols.begin());
  }

  std::vector<std::string> cells_;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
};

namespace detail {

inline std::string skipped(const std::string& why) { return "skipped:" + why; }

inline void analyse_separator(const ExperimentConfig& c, const Graph& g, ReportRow& row) {
  row.set("sep_algo", c.separator);
  const std::size_t n = g.order();
  std::optional<SeparatorResult> sep;
  if (c.separator == "exact" && n > kMaxExactSeparatorOrder) {
    row.set("sep_size", skipped("exact-limit-20"));
  } else if (c.separator == "spectral" && n < 3) {
    row.set("sep_size", skipped("n<3"));
  } else if (n == 0) {
    row.set("sep_size", skipped("n=0"));
  } else {
    sep = c.separator == "exact"      ? exact_min_separator(g)
          : c.separator == "spectral" ? spectral_separator(g)
                                      : bfs_separator(g);
    row.set("sep_size", sep->s.size());
    row.set("sep_valid", certifies_separator(g, *sep) && is_valid_separator(g, sep->s));
  }
  if (g.size() >= 2) {
    const double bound = separator_size_bound(g.size(), c.params);
    row.set("sep_bound", bound);
    if (sep) {
      const double m = static_cast<double>(g.size());
      row.set("sep_ratio", static_cast<double>(sep->s.size()) / (std::sqrt(m) * std::log2(m)));
    }
  } else {
    row.set("sep_bound", skipped("m<2"));
    if (sep) row.set("sep_ratio", skipped("m<2"));
  }
}

inline void analyse_biclique(const ExperimentConfig& c, const Graph& g, ReportRow& row) {
  const bool exact = c.biclique == "exact" ||
                     (c.biclique == "auto" && g.order() <= kMaxExactBicliqueOrder);
  row.set("biclique_method", exact ? "exact" : "greedy");
  if (exact && g.order() > kMaxExactBicliqueOrder) {
    row.set("biclique_size", skipped("exact-limit-16"));
  } else {
    const auto r = exact ? max_biclique_exact(g) : greedy_biclique(g);
    row.set("biclique_size", r.side());
    row.set("biclique_valid", certifies_biclique(g, r));
  }
  if (g.order() >= 3 && g.size() >= 1) {
    row.set("biclique_target", biclique_size_target(g.order(), g.size(), c.params));
  } else {
    row.set("biclique_target", skipped("n<3-or-m<1"));
  }
}

inline void analyse_drawing(const ExperimentConfig& c, const Instance& inst, ReportRow& row) {
  const Drawing* drawing = inst.drawing();
  if (c.wants("crossings")) {
    const auto count = crossing_count(*drawing);
    row.set("crossings", count.pairs);
    row.set("crossing_ratio", count.ratio ? format_number(*count.ratio) : skipped("m<4n"));
  }
  if (c.wants("quasiplanar")) row.set("quasiplanar", quasi_planarity(*drawing, c.t));
  if (c.wants("crossing-pairs")) {
    const auto sets = crossing_pair_sets(*drawing);
    row.set("crossing_pairs", sets.e1.size());
    row.set("crossing_pairs_valid", all_pairs_cross(*drawing, sets));
  }
}

}  // namespace detail

/// Runs every requested analysis on one instance. Each certificate (separator,
/// set, colouring, biclique, crossing pair) is rechecked before it is recorded.
inline ReportRow analyse_instance(const ExperimentConfig& c, const Instance& inst) {
  ReportRow row;
  const auto& d = inst.descriptor;
  const Graph& g = inst.graph;
  row.set("generator", d.generator);
  row.set("n_param", format_optional(d.n));
  row.set("m_param", format_optional(d.m));
  row.set("rows", format_optional(d.rows));
  row.set("cols", format_optional(d.cols));
  row.set("span", format_optional(d.span));
  row.set("length", format_optional(d.length));
  row.set("seed", format_optional(d.seed));
  if (const auto* drawing = inst.drawing()) {
    row.set("objects", drawing->vertex_count());
    row.set("drawing_edges", drawing->edge_count());
  } else {
    row.set("objects", std::get<CurveFamily>(inst.object).size());
  }
  row.set("vertices", g.order());
  row.set("edges", g.size());
  row.set("t", c.t);

  if (c.wants("separate")) detail::analyse_separator(c, g, row);
  if (c.wants("indep")) {
    const auto set = find_independent_set(g, c.t, c.params);
    row.set("indep_size", set.size());
    row.set("indep_valid", is_independent_set(g, set));
    const auto target = independence_target(g.order(), c.t, c.params);
    row.set("indep_target", target ? format_number(*target) : detail::skipped("n<3"));
  }
  if (c.wants("color")) {
    const auto coloring = color_graph(g, c.t, c.params);
    row.set("colors", coloring.k);
    row.set("color_proper", is_proper_coloring(g, coloring));
    row.set("color_bound",
            coloring.bound ? format_number(*coloring.bound) : detail::skipped("n<3"));
  }
  if (c.wants("kt-free")) row.set("kt_free", is_kt_free(g, c.t));
  if (c.wants("biclique")) detail::analyse_biclique(c, g, row);
  if (c.wants("eh")) {
    if (g.order() < 3) {
      row.set("eh_branch", detail::skipped("n<3"));
    } else {
      const auto r = clique_or_independent(g, c.epsilon, c.params);
      const bool clique = r.branch == CliqueOrIndependent::Branch::kClique;
      row.set("eh_branch", clique ? "clique" : "independent");
      row.set("eh_size", r.set.size());
      row.set("eh_target", clique ? r.clique_target : r.independent_target);
      row.set("eh_met", r.target_met());
      row.set("eh_valid", clique ? is_clique(g, r.set) : is_independent_set(g, r.set));
    }
  }
  if (inst.drawing()) detail::analyse_drawing(c, inst, row);
  if (c.wants("edge-bound")) {
    row.set("edge_bound_per_vertex", evaluate_edge_bound(c.t, c.params).bound_per_vertex);
  }
  return row;
}

/// Executes the grid. Rows follow the sorted instance order, whatever order
/// they were computed in.
inline ExperimentReport run_experiment(const ExperimentConfig& config) {
  ExperimentReport report{config, {}};
  for (const auto& d : config.instances) {
    report.rows.push_back(analyse_instance(config, materialize(d)));
  }
  return report;
}

// ---- persistence ----------------------------------------------------------

inline std::string format_report_csv(const ExperimentReport& report) {
  std::string out;
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.cells().size(); ++i) {
      if (row.cells()[i].find_first_of(",\n") != std::string::npos) {
        throw std::logic_error("report cell contains a separator: " + row.cells()[i]);
      }
      out += (i ? "," : "") + row.cells()[i];
    }
    out += '\n';
  }
  return out;
}

inline std::vector<ReportRow> parse_report_csv(const std::string& text) {
  std::vector<ReportRow> rows;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty report");
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!s.empty() && s.back() == ',') cells.emplace_back();
    return cells;
  };
  if (split(line) != report_columns()) throw ConfigError("report header does not match schema");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != report_columns().size()) {
      throw ConfigError("report row has " + std::to_string(cells.size()) + " cells");
    }
    ReportRow row;
    row.cells() = std::move(cells);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Metadata stored next to a CSV report: tool version and the full config.
inline nlohmann::ordered_json report_metadata(const ExperimentReport& report) {
  nlohmann::ordered_json j;
  j["tool"] = kToolVersion;
  j["columns"] = report_columns();
  j["rows"] = report.rows.size();
  j["config"] = config_to_json(report.config);
  return j;
}

// ---- verification ---------------------------------------------------------

enum class CheckStatus { kPass, kFail, kWithinBound, kExceedsBound, kNotApplicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kWithinBound: return "within-bound";
    case CheckStatus::kExceedsBound: return "exceeds-bound";
    case CheckStatus::kNotApplicable: return "not-applicable";
  }
  return "?";
}

struct CheckLine {
  std::size_t row = 0;
  std::string check;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct Verification {
  std::vector<CheckLine> lines;

  /// Only structural invariants can fail; bound comparisons are informational.
  bool hard_ok() const {
    return std::none_of(lines.begin(), lines.end(),
                        [](const CheckLine& l) { return l.status == CheckStatus::kFail; });
  }

  std::string listing() const {
    std::string out;
    for (const auto& l : lines) {
      out += "row " + std::to_string(l.row) + " " + l.check + ": " + to_string(l.status);
      if (!l.detail.empty()) out += " (" + l.detail + ")";
      out += '\n';
    }
    return out;
  }
};

/// Checks every structural invariant recorded in the report and compares the
/// measured quantities with the bounds evaluated at the configured constants.
inline Verification verify_bounds(const ExperimentReport& report) {
  Verification v;
  const auto& c = report.config;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    auto hard = [&](const char* column, const char* name) {
      if (!row.available(column)) return;
      const bool ok = row.get(column) == "true";
      v.lines.push_back({i, name, ok ? CheckStatus::kPass : CheckStatus::kFail, ""});
    };
    auto compare = [&](const std::string& name, double measured, double bound) {
      v.lines.push_back({i, name,
                         measured <= bound ? CheckStatus::kWithinBound
                                           : CheckStatus::kExceedsBound,
                         format_number(measured) + " vs " + format_number(bound)});
    };
    hard("sep_valid", "separator-valid");
    hard("indep_valid", "independent-set-valid");
    hard("color_proper", "coloring-proper");
    hard("biclique_valid", "biclique-complete");
    hard("eh_valid", "clique-or-independent-certificate");
    hard("crossing_pairs_valid", "crossing-pairs-cross");

    const bool kt_known = row.available("kt_free");
    const bool kt_free = kt_known && row.get("kt_free") == "true";
    const std::string kt_note = "graph is not K_" + std::to_string(c.t) + "-free";

    if (row.available("sep_size") && row.available("sep_bound")) {
      compare("separator-size-bound", row.number("sep_size"), row.number("sep_bound"));
    }
    if (row.available("colors") && row.available("color_bound")) {
      if (kt_known && !kt_free) {
        v.lines.push_back({i, "coloring-bound", CheckStatus::kNotApplicable, kt_note});
      } else {
        compare("coloring-bound", row.number("colors"), row.number("color_bound"));
      }
    }
    if (row.available("indep_size") && row.available("indep_target")) {
      if (kt_known && !kt_free) {
        v.lines.push_back({i, "independence-target", CheckStatus::kNotApplicable, kt_note});
      } else {
        // The target is a lower bound: "within" means the set reaches it.
        const double size = row.number("indep_size");
        const double target = row.number("indep_target");
        v.lines.push_back({i, "independence-target",
                           size >= target ? CheckStatus::kWithinBound
                                          : CheckStatus::kExceedsBound,
                           format_number(size) + " vs target " + format_number(target)});
      }
    }
    if (row.available("eh_met")) {
      v.lines.push_back({i, "clique-or-independent-target",
                         row.get("eh_met") == "true" ? CheckStatus::kWithinBound
                                                     : CheckStatus::kExceedsBound,
                         row.get("eh_branch") + " " + row.get("eh_size") + " vs target " +
                             row.get("eh_target")});
    }
    if (row.available("biclique_size") && row.get("biclique_method") == "exact") {
      const double edges = row.number("edges");
      const double n = row.number("vertices");
      if (row.number("biclique_size") < static_cast<double>(c.t)) {
        compare("biclique-free-edge-shape", edges,
                biclique_free_edge_estimate(static_cast<std::size_t>(n), c.t, c.report_c));
        if (row.available("edge_bound_per_vertex")) {
          compare("biclique-free-edge-bound", edges, row.number("edge_bound_per_vertex") * n);
        }
      } else {
        v.lines.push_back({i, "biclique-free-edge-bound", CheckStatus::kNotApplicable,
                           "contains K_{t,t}"});
      }
    }
    if (row.available("drawing_edges")) {
      const auto n = static_cast<std::size_t>(row.number("objects"));
      const double m = row.number("drawing_edges");
      if (row.available("crossings") && row.get("crossings") == "0" && n >= 3) {
        const bool ok = m <= 3.0 * static_cast<double>(n) - 6.0;
        v.lines.push_back({i, "plane-edge-bound", ok ? CheckStatus::kPass : CheckStatus::kFail,
                           format_number(m) + " vs 3n-6 = " + std::to_string(3 * n - 6)});
        hard("quasiplanar", "plane-is-quasi-planar");
      }
      if (row.available("quasiplanar")) {
        if (row.get("quasiplanar") == "true") {
          if (auto bound = quasi_planar_edge_bound(n, c.t, c.params)) {
            compare("quasi-planar-edge-bound", m, *bound);
          }
        } else {
          v.lines.push_back({i, "quasi-planar-edge-bound", CheckStatus::kNotApplicable,
                             "drawing has " + std::to_string(c.t) + " pairwise crossing edges"});
        }
      }
    }
  }
  return v;
}

/// Regenerates every row from its descriptor and compares cell by cell.
inline Verification verify_reproducible(const ExperimentReport& report) {
  Verification v;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& stored = report.rows[i];
    const auto fresh = analyse_instance(report.config, materialize(stored.descriptor()));
    std::string diff;
    for (std::size_t k = 0; k < report_columns().size(); ++k) {
      if (stored.cells()[k] != fresh.cells()[k]) {
        diff += report_columns()[k] + "=" + stored.cells()[k] + "->" + fresh.cells()[k] + " ";
      }
    }
    v.lines.push_back({i, "reproducible", diff.empty() ? CheckStatus::kPass : CheckStatus::kFail,
                       diff});
  }
  return v;
}

}  // namespace strgraph

#endif  // STRGRAPH_EXPERIMENT_HPP
