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

// Command-line front end. Every subcommand reads the text formats of io.hpp,
// writes its result file to --out and a one-row report (csv or json) to
// --report or stdout. Exit codes: 0 ok, 1 invariant violation, 2 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strgraph/strgraph.hpp"

namespace {

using namespace strgraph;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInvariant = 1;
constexpr int kBadInput = 2;

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  ParamSet params;
  std::uint64_t seed = 1;
  std::string out;
  std::string report;
  std::string format = "csv";
};

// A single report row, emitted as a csv header + line or a flat json object.
class Report {
 public:
  explicit Report(std::string command) { add("command", std::move(command)); }

  void add(const std::string& key, Json value) { fields_.emplace_back(key, std::move(value)); }
  void add(const std::string& key, const char* value) { add(key, Json(value)); }
  void add(const std::string& key, const std::string& value) { add(key, Json(value)); }
  void add(const std::string& key, bool value) { add(key, Json(value)); }
  void add(const std::string& key, std::size_t value) { add(key, Json(value)); }
  // Ten significant digits in both formats; non-finite values stay strings.
  void add(const std::string& key, double value) {
    const auto text = format_number(value);
    add(key, std::isfinite(value) ? Json(std::stod(text)) : Json(text));
  }
  void add(const std::string& key, std::optional<double> value) {
    add(key, value ? Json(format_number(*value)) : kNotApplicable);
  }

  std::string render(const std::string& format) const {
    if (format == "json") {
      Json j;
      for (const auto& [k, v] : fields_) j[k] = v;
      return j.dump(2) + "\n";
    }
    std::string header, line;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      header += (i ? "," : "") + fields_[i].first;
      const auto& v = fields_[i].second;
      std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
      if (v.is_number_float()) cell = format_number(v.get<double>());
      line += (i ? "," : "") + cell;
    }
    return header + "\n" + line + "\n";
  }

 private:
  std::vector<std::pair<std::string, Json>> fields_;
};

void emit(const Globals& g, const Report& r) {
  const auto text = r.render(g.format);
  if (g.report.empty()) {
    std::cout << text;
  } else {
    write_text_file(g.report, text);
  }
}

void write_result(const Globals& g, const std::string& content) {
  if (!g.out.empty()) write_text_file(g.out, content);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

// Any supported input file, with the graph the analyses run on: the string
// graph of a curve family, the crossing graph of a drawing, or the graph itself.
struct Loaded {
  FileKind kind;
  std::optional<Drawing> drawing;
  Graph graph;
};

Loaded load(const std::string& path) {
  const auto text = read_text_file(path);
  Loaded l{detect_file_kind(text), std::nullopt, {}};
  switch (l.kind) {
    case FileKind::kCurveFamily:
      l.graph = build_string_graph(parse_curve_family(text));
      break;
    case FileKind::kDrawing:
      l.drawing = parse_drawing(text);
      l.graph = build_edge_crossing_graph(*l.drawing);
      break;
    case FileKind::kGraph:
      l.graph = parse_graph(text);
      break;
  }
  return l;
}

const char* kind_name(FileKind k) {
  switch (k) {
    case FileKind::kCurveFamily: return "curves";
    case FileKind::kDrawing: return "drawing";
    case FileKind::kGraph: return "graph";
  }
  return "?";
}

Report base_report(const char* command, const Loaded& l) {
  Report r(command);
  r.add("input_kind", kind_name(l.kind));
  r.add("vertices", l.graph.order());
  r.add("edges", l.graph.size());
  return r;
}

const Drawing& need_drawing(const Loaded& l) {
  if (!l.drawing) throw std::invalid_argument("this command needs a drawing file");
  return *l.drawing;
}

std::string format_edge_set(const char* label, const std::vector<std::size_t>& idx) {
  VertexSet s(idx.begin(), idx.end());
  return format_labelled_set(label, s);
}

// ---- subcommands -----------------------------------------------------------

int cmd_gen(const Globals& g, InstanceDescriptor d) {
  if (is_seeded_generator(d.generator) && !d.seed) d.seed = g.seed;
  const Instance inst = materialize(d);
  std::string text;
  if (const auto* drawing = inst.drawing()) {
    text = format_drawing(*drawing);
  } else {
    text = format_curve_family(std::get<CurveFamily>(inst.object));
  }
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(g.out, text);
    Report r("gen");
    r.add("generator", inst.descriptor.generator);
    r.add("seed", format_optional(inst.descriptor.seed));
    r.add("vertices", inst.graph.order());
    r.add("edges", inst.graph.size());
    emit(g, r);
  }
  return kOk;
}

int cmd_build(const Globals& g, const std::string& input) {
  const Loaded l = load(input);
  const auto text = format_graph(l.graph);
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(g.out, text);
    emit(g, base_report("build", l));
  }
  return kOk;
}

int cmd_separate(const Globals& g, const std::string& input, const std::string& algo) {
  const Loaded l = load(input);
  const Graph& gr = l.graph;
  if (gr.order() == 0) throw std::invalid_argument("empty graph has nothing to separate");
  const SeparatorResult s = algo == "exact" ? exact_min_separator(gr)
                            : algo == "bfs" ? bfs_separator(gr)
                                            : spectral_separator(gr);
  const bool valid = certifies_separator(gr, s) && is_valid_separator(gr, s.s).has_value();
  require(valid, "separator failed its recheck");
  write_result(g, format_labelled_set("S", s.s) + format_labelled_set("V1", s.v1) +
                      format_labelled_set("V2", s.v2));
  Report r = base_report("separate", l);
  r.add("algorithm", algo);
  r.add("size", s.s.size());
  r.add("v1", s.v1.size());
  r.add("v2", s.v2.size());
  r.add("valid", valid);
  if (gr.size() >= 2) {
    const double bound = separator_size_bound(gr.size(), g.params);
    r.add("bound", bound);
    r.add("ratio", static_cast<double>(s.s.size()) / bound);
  } else {
    r.add("bound", kNotApplicable);
    r.add("ratio", kNotApplicable);
  }
  emit(g, r);
  return kOk;
}

int cmd_indep(const Globals& g, const std::string& input, std::size_t t) {
  const Loaded l = load(input);
  RecursionStats stats;
  const VertexSet s = find_independent_set(l.graph, t, g.params, &stats);
  const bool valid = is_independent_set(l.graph, s);
  require(valid, "independent set failed its recheck");
  write_result(g, format_labelled_set("I", s));
  Report r = base_report("indep", l);
  r.add("t", t);
  r.add("size", s.size());
  r.add("valid", valid);
  r.add("target", independence_target(l.graph.order(), t, g.params));
  r.add("recursion_size", stats.recursion_size);
  r.add("extended", stats.extended);
  r.add("exact_leaves", stats.exact_leaves);
  r.add("separator_splits", stats.separator_splits);
  r.add("biclique_splits", stats.biclique_splits);
  emit(g, r);
  return kOk;
}

int cmd_color(const Globals& g, const std::string& input, std::size_t t) {
  const Loaded l = load(input);
  const Coloring c = color_graph(l.graph, t, g.params);
  const bool proper = is_proper_coloring(l.graph, c);
  require(proper, "colouring failed its recheck");
  std::string text;
  const auto classes = c.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    text += format_labelled_set("C" + std::to_string(i), classes[i]);
  }
  write_result(g, text);
  Report r = base_report("color", l);
  r.add("t", t);
  r.add("colors", c.k);
  r.add("proper", proper);
  r.add("bound", c.bound);
  emit(g, r);
  return kOk;
}

int cmd_eh(const Globals& g, const std::string& input, double epsilon) {
  const Loaded l = load(input);
  const auto res = clique_or_independent(l.graph, epsilon, g.params);
  const bool clique = res.branch == CliqueOrIndependent::Branch::kClique;
  const bool valid =
      clique ? is_clique(l.graph, res.set) : is_independent_set(l.graph, res.set);
  require(valid, "clique-or-independent certificate failed its recheck");
  write_result(g, format_labelled_set(clique ? "clique" : "independent", res.set));
  Report r = base_report("eh", l);
  r.add("epsilon", epsilon);
  r.add("branch", clique ? "clique" : "independent");
  r.add("size", res.set.size());
  r.add("t", res.t);
  r.add("c", res.exponent_c);
  r.add("clique_target", res.clique_target);
  r.add("independent_target", res.independent_target);
  r.add("target_met", res.target_met());
  r.add("valid", valid);
  emit(g, r);
  return kOk;
}

int cmd_biclique(const Globals& g, const std::string& input, bool exact) {
  const Loaded l = load(input);
  const BicliqueResult b = exact ? max_biclique_exact(l.graph) : greedy_biclique(l.graph);
  const bool valid = certifies_biclique(l.graph, b);
  require(valid, "biclique failed its recheck");
  write_result(g, format_labelled_set("A", b.a) + format_labelled_set("B", b.b));
  Report r = base_report("biclique", l);
  r.add("method", exact ? "exact" : "greedy");
  r.add("side", b.side());
  r.add("valid", valid);
  if (l.graph.order() >= 3 && l.graph.size() >= 1) {
    r.add("target", biclique_size_target(l.graph.order(), l.graph.size(), g.params));
  } else {
    r.add("target", kNotApplicable);
  }
  emit(g, r);
  return kOk;
}

int cmd_bound(const Globals& g, std::size_t t) {
  const auto c = certified_edge_bound(t, g.params);
  Report r("bound");
  r.add("t", t);
  r.add("d", c.d);
  r.add("b", c.b);
  r.add("a", c.a);
  r.add("log2_x", c.log2_x);
  r.add("log2_n0", c.log2_n0);
  r.add("phi_n0", c.phi_n0);
  r.add("phi_ok", c.phi_ok);
  r.add("ratio_n0", c.ratio_n0);
  r.add("ratio_limit", c.ratio_limit);
  r.add("ratio_ok", c.ratio_ok);
  r.add("q_lower", c.q.lower);
  r.add("q_upper", c.q.upper);
  r.add("q_tail", c.q.tail_sum);
  r.add("q_terms", c.q.terms);
  r.add("q_limit", c.q_limit);
  r.add("q_ok", c.q_ok);
  r.add("log2_bound_per_vertex", c.log2_bound_per_vertex);
  r.add("bound_per_vertex", c.bound_per_vertex);
  emit(g, r);
  return kOk;
}

int cmd_crossings(const Globals& g, const std::string& input) {
  const Loaded l = load(input);
  const Drawing& d = need_drawing(l);
  const auto c = crossing_count(d);
  Report r("crossings");
  r.add("points", d.vertex_count());
  r.add("drawing_edges", d.edge_count());
  r.add("crossings", c.pairs);
  r.add("ratio", c.ratio);
  emit(g, r);
  return kOk;
}

int cmd_crossing_pairs(const Globals& g, const std::string& input) {
  const Loaded l = load(input);
  const Drawing& d = need_drawing(l);
  const auto sets = crossing_pair_sets(d);
  const bool valid = all_pairs_cross(d, sets);
  require(valid, "crossing pair sets failed the geometric recheck");
  write_result(g, format_edge_set("E1", sets.e1) + format_edge_set("E2", sets.e2));
  Report r("crossing-pairs");
  r.add("points", d.vertex_count());
  r.add("drawing_edges", d.edge_count());
  r.add("size", sets.e1.size());
  r.add("valid", valid);
  emit(g, r);
  return kOk;
}

int cmd_quasiplanar(const Globals& g, const std::string& input, std::size_t t) {
  const Loaded l = load(input);
  const Drawing& d = need_drawing(l);
  const bool q = quasi_planarity(d, t);
  Report r("quasiplanar");
  r.add("points", d.vertex_count());
  r.add("drawing_edges", d.edge_count());
  r.add("t", t);
  r.add("quasiplanar", q);
  r.add("edge_bound", quasi_planar_edge_bound(d.vertex_count(), t, g.params));
  emit(g, r);
  return kOk;
}

std::string report_json(const ExperimentReport& rep) {
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json o;
    for (std::size_t i = 0; i < report_columns().size(); ++i) {
      o[report_columns()[i]] = row.cells()[i];
    }
    rows.push_back(std::move(o));
  }
  Json j = report_metadata(rep);
  j["results"] = std::move(rows);
  return j.dump(2) + "\n";
}

int cmd_experiment(const Globals& g, const std::string& config_path,
                   const std::vector<std::string>& cli_params) {
  Json j = Json::parse(read_text_file(config_path), nullptr, true, true);
  // Global flags given explicitly on the command line override the file.
  for (const auto& key : cli_params) {
    if (key == "d") j["params"]["d"] = g.params.d;
    if (key == "b") j["params"]["b"] = g.params.b;
    if (key == "C") j["params"]["C"] = g.params.C;
  }
  const auto config = parse_experiment_config(nlohmann::json::parse(j.dump()));
  const auto rep = run_experiment(config);
  const auto checks = verify_bounds(rep);
  std::string text = g.format == "json" ? report_json(rep) : format_report_csv(rep);
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(g.out, text);
    if (g.format == "csv") {
      write_text_file(std::filesystem::path(g.out).replace_extension(".json").string(),
                      report_metadata(rep).dump(2) + "\n");
    }
  }
  if (!checks.hard_ok()) {
    std::cerr << checks.listing();
    return kInvariant;
  }
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& report_path, std::string config_path) {
  if (config_path.empty()) {
    config_path = std::filesystem::path(report_path).replace_extension(".json").string();
  }
  const Json meta = Json::parse(read_text_file(config_path));
  if (!meta.contains("config")) throw ConfigError("metadata has no 'config' object");
  ExperimentReport rep{parse_experiment_config(nlohmann::json::parse(meta["config"].dump())),
                       parse_report_csv(read_text_file(report_path))};
  auto checks = verify_reproducible(rep);
  const auto bounds = verify_bounds(rep);
  checks.lines.insert(checks.lines.end(), bounds.lines.begin(), bounds.lines.end());
  const std::string listing = checks.listing() +
                              (checks.hard_ok() ? "verify: pass\n" : "verify: FAIL\n");
  if (g.out.empty()) {
    std::cout << listing;
  } else {
    write_text_file(g.out, listing);
  }
  return checks.hard_ok() ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String graphs: separators, colouring, bicliques and crossing statistics"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--d", g.params.d, "separator constant d (>= 1)");
  app.add_option("--b", g.params.b, "biclique exponent b (>= 1)");
  app.add_option("--C", g.params.C, "independence constant C (> 0)");
  app.add_option("--base-case", g.params.base_case_n, "exact search cutoff for recursion");
  app.add_option("--seed", g.seed, "seed for randomized generators");
  app.add_option("--out", g.out, "result file");
  app.add_option("--report", g.report, "report file (default stdout)");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"csv", "json"}));

  std::string input;
  std::size_t t = 3;
  double epsilon = 0.5;
  std::string algo = "spectral";
  bool exact = false;
  InstanceDescriptor desc;
  std::uint64_t gn = 0, gm = 0, rows = 0, cols = 0, span = 0, length = 0;
  std::string config_path;

  auto* gen = app.add_subcommand("gen", "generate a curve family or drawing");
  gen->add_option("--kind", desc.generator, "generator name")
      ->required()
      ->check(CLI::IsMember(generator_names()));
  auto* opt_n = gen->add_option("--n", gn, "size");
  auto* opt_m = gen->add_option("--m", gm, "edges (random-draw, random-plane cap)");
  auto* opt_rows = gen->add_option("--rows", rows, "grid rows");
  auto* opt_cols = gen->add_option("--cols", cols, "grid columns");
  auto* opt_span = gen->add_option("--span", span, "coordinate span");
  auto* opt_len = gen->add_option("--length", length, "max segment extent (random-seg)");

  auto* build = app.add_subcommand("build", "write the string graph (or crossing graph)");
  auto* separate = app.add_subcommand("separate", "balanced 2/3 separator");
  separate->add_option("--algo", algo, "exact|spectral|bfs")
      ->check(CLI::IsMember({"exact", "spectral", "bfs"}));
  auto* indep = app.add_subcommand("indep", "independent set by separator/biclique recursion");
  auto* color = app.add_subcommand("color", "colouring by repeated extraction");
  auto* eh = app.add_subcommand("eh", "clique or large independent set");
  eh->add_option("--epsilon", epsilon, "epsilon in (0, 1)");
  auto* biclique = app.add_subcommand("biclique", "balanced biclique");
  auto* flag_exact = biclique->add_flag("--exact", exact, "exhaustive search (n <= 16)");
  biclique->add_flag("--greedy", "greedy search (default)")->excludes(flag_exact);
  auto* bound = app.add_subcommand("bound", "edge bound for K_{t,t}-free string graphs");
  auto* crossings = app.add_subcommand("crossings", "crossing pairs of a drawing");
  auto* crossing_pairs = app.add_subcommand("crossing-pairs", "two mutually crossing edge sets");
  auto* quasiplanar = app.add_subcommand("quasiplanar", "test for t pairwise crossing edges");
  auto* experiment = app.add_subcommand("experiment", "run a JSON-described experiment grid");
  experiment->add_option("config", config_path, "config file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* verify = app.add_subcommand("verify", "regenerate a CSV report and recheck it");
  std::string verify_config;
  verify->add_option("report", config_path, "report csv")->required()->check(CLI::ExistingFile);
  verify->add_option("--config", verify_config, "metadata json (default: report with .json)");

  for (auto* sub : {build, separate, indep, color, eh, biclique, crossings, crossing_pairs,
                    quasiplanar}) {
    sub->add_option("input,--in", input, "curve family, drawing or graph file")
        ->required()
        ->check(CLI::ExistingFile);
  }
  for (auto* sub : {indep, color, bound, quasiplanar}) {
    sub->add_option("--t", t, "clique parameter t (>= 2)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    g.params.validate();
    if (*gen) {
      auto set = [](CLI::Option* o, std::uint64_t v) {
        return o->count() ? std::optional<std::uint64_t>(v) : std::nullopt;
      };
      desc.n = set(opt_n, gn);
      desc.m = set(opt_m, gm);
      desc.rows = set(opt_rows, rows);
      desc.cols = set(opt_cols, cols);
      desc.span = set(opt_span, span);
      desc.length = set(opt_len, length);
      if (app.get_option("--seed")->count()) desc.seed = g.seed;
      return cmd_gen(g, desc);
    }
    if (*build) return cmd_build(g, input);
    if (*separate) return cmd_separate(g, input, algo);
    if (*indep) return cmd_indep(g, input, t);
    if (*color) return cmd_color(g, input, t);
    if (*eh) return cmd_eh(g, input, epsilon);
    if (*biclique) return cmd_biclique(g, input, exact);
    if (*bound) return cmd_bound(g, t);
    if (*crossings) return cmd_crossings(g, input);
    if (*crossing_pairs) return cmd_crossing_pairs(g, input);
    if (*quasiplanar) return cmd_quasiplanar(g, input, t);
    if (*experiment) {
      std::vector<std::string> overrides;
      for (const char* k : {"d", "b", "C"}) {
        if (app.get_option(std::string("--") + k)->count()) overrides.emplace_back(k);
      }
      return cmd_experiment(g, config_path, overrides);
    }
    if (*verify) return cmd_verify(g, config_path, verify_config);
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range and domain_error (bound hypotheses)
    // describe the input; any other logic_error is an internal check.
    const bool input_error = dynamic_cast<const std::invalid_argument*>(&e) ||
                             dynamic_cast<const std::out_of_range*>(&e) ||
                             dynamic_cast<const std::domain_error*>(&e);
    std::cerr << (input_error ? "error: " : "invariant violation: ") << e.what() << '\n';
    return input_error ? kBadInput : kInvariant;
  } catch (const std::exception& e) {
    // ParseError, ConfigError, I/O and JSON errors.
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
