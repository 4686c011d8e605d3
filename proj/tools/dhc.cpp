// dhc: check, color, generate and search directed hypergraphs.
//
// Exit codes: 0 ok, 1 property or colorability negative, 2 input error,
// 3 internal structure violation, 4 search cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "dirhyp/constructions.hpp"
#include "dirhyp/errors.hpp"
#include "dirhyp/main3unif.hpp"
#include "dirhyp/model.hpp"
#include "dirhyp/oracle.hpp"
#include "dirhyp/properties.hpp"
#include "dirhyp/recolor.hpp"

using namespace dirhyp;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kStructure = 3, kCap = 4 };

// Outcome details for the optional --report file.
struct RunReport {
  std::string command;
  std::string input_digest;
  std::string outcome;
  std::string detail;
  std::string output_path;
};

std::string fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

struct Input {
  std::string text;
  Hypergraph h;
};

Input load(const std::string& path, RunReport& report) {
  Input in{read_input(path), {}};
  report.input_digest = fnv1a(in.text);
  in.h = parse_hypergraph(in.text);
  return in;
}

int negative(RunReport& report, const std::string& what) {
  std::cout << what << '\n';
  report.outcome = "violation";
  report.detail = what;
  return kNegative;
}

// ---- check ----

struct CheckArgs {
  std::string property;
  std::string input;
  int c = 2;
  std::uint64_t cap = 10'000'000;
};

int cmd_check(const CheckArgs& a, RunReport& report) {
  Input in = load(a.input, report);
  CheckResult w;
  if (a.property == "property-s") {
    w = check_property_s(in.h);
  } else if (a.property == "property-s-weak") {
    w = check_property_s(in.h, HeadRule::AtMostTail);
  } else if (a.property == "specboth") {
    w = check_specboth(in.h);
  } else if (a.property == "linear") {
    w = check_linear(in.h);
  } else if (a.property == "poly") {
    std::vector<Hypergraph> copies(static_cast<std::size_t>(a.c), in.h);
    w = check_poly_condition(copies, static_cast<std::size_t>(a.c), a.cap);
  } else if (a.property == "oriented") {
    if (!is_two_one(in.h)) return negative(report, "not a 2->1 hypergraph");
    if (!is_oriented(in.h)) return negative(report, "two hyperedges share a vertex triple");
  } else if (a.property == "two-one") {
    if (!is_two_one(in.h)) return negative(report, "not a 2->1 hypergraph");
  }
  if (w) return negative(report, w->describe(in.h));
  std::cout << "ok\n";
  report.outcome = "ok";
  return kOk;
}

// ---- color ----

struct ColorArgs {
  std::string algorithm = "auto";
  std::string input;
  std::string output;
  std::optional<int> c;
  bool dump_structure = false;
};

int finish_coloring(const Hypergraph& h, const Coloring& col, const ColorArgs& a,
                    RunReport& report) {
  write_output(a.output, serialize_coloring(col, h));
  report.outcome = "ok";
  report.output_path = a.output.empty() ? "-" : a.output;
  return kOk;
}

int color_main(const Hypergraph& h, const ColorArgs& a, RunReport& report) {
  if (!is_two_one(h) && !normalize_three_uniform(h)) {
    return negative(report, "input is not a 2->1 hypergraph");
  }
  Main3Result r;
  try {
    r = color_2to1_property_s_detailed(h);
  } catch (const PropertySViolation& e) {
    return negative(report, e.witness().describe(h));
  }
  if (a.dump_structure) std::cerr << structure_report(r);
  if (!is_proper_coloring(h, r.coloring)) {
    throw StructureViolated("final-coloring", "output coloring is not proper");
  }
  return finish_coloring(h, r.coloring, a, report);
}

int cmd_color(const ColorArgs& a, RunReport& report) {
  Input in = load(a.input, report);
  const Hypergraph& h = in.h;
  std::string algo = a.algorithm;
  if (algo == "auto") {
    auto s = check_property_s(h);
    if (!check_specboth(h)) {
      algo = "specboth";
    } else if (!s && (is_two_one(h) || normalize_three_uniform(h))) {
      algo = "main";
    } else if (!s && !check_linear(h)) {
      algo = "linear";
    } else {
      return negative(report, s ? s->describe(h) : "no algorithm applies to this input");
    }
  }
  if (algo == "main") return color_main(h, a, report);
  if (algo == "specboth") {
    if (auto w = check_specboth(h)) return negative(report, w->describe(h));
    Coloring col = color_specboth(h).coloring;
    if (!is_proper_coloring(h, col)) throw StructureViolated("final-coloring", "not proper");
    return finish_coloring(h, col, a, report);
  }
  if (algo == "linear") {
    if (auto w = check_linear(h)) return negative(report, w->describe(h));
    if (auto w = check_property_s(h)) return negative(report, w->describe(h));
    Coloring col = color_linear(h);
    if (!is_proper_coloring(h, col)) throw StructureViolated("final-coloring", "not proper");
    return finish_coloring(h, col, a, report);
  }
  // poly
  if (!a.c || *a.c < 1) throw std::invalid_argument("--algorithm poly needs --c >= 1");
  Coloring col = color_polychromatic(h, *a.c);
  if (!is_polychromatic(h, col, *a.c)) throw StructureViolated("final-coloring", "not polychromatic");
  return finish_coloring(h, col, a, report);
}

// ---- gen ----

struct GenArgs {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string pattern;
  std::string output;
};

int cmd_gen(const GenArgs& a, RunReport& report) {
  auto need = [](std::size_t v, const char* flag) {
    if (v == 0) throw std::invalid_argument(std::string("missing ") + flag);
    return v;
  };
  Hypergraph h;
  if (a.name == "lower-bound") {
    h = lower_bound_construction(need(a.n, "--n"));
  } else if (a.name == "oriented-lower-bound") {
    h = oriented_lower_bound(need(a.n, "--n"));
  } else if (a.name == "tightness") {
    h = tightness_construction(need(a.k, "--k"));
  } else if (a.name == "star") {
    h = star_construction(need(a.n, "--n"), need(a.k, "--k"));
  } else {
    if (a.pattern.empty()) throw std::invalid_argument("missing --pattern");
    h = pattern(a.pattern).hypergraph;
  }
  write_output(a.output, serialize(h));
  report.outcome = "ok";
  report.output_path = a.output.empty() ? "-" : a.output;
  return kOk;
}

// ---- contains ----

struct ContainsArgs {
  std::string pattern;
  std::string input;
  std::uint64_t cap = 100'000'000;
};

int cmd_contains(const ContainsArgs& a, RunReport& report) {
  Hypergraph p = pattern(a.pattern).hypergraph;
  Input in = load(a.input, report);
  auto emb = contains_subhypergraph(in.h, p, a.cap);
  if (!emb) {
    std::cout << "avoided\n";
    report.outcome = "ok";
    return kOk;
  }
  std::ostringstream out;
  out << "contained\n";
  for (VertexId v = 0; v < p.num_vertices(); ++v) {
    out << "vertex " << p.name(v) << " -> " << in.h.name(emb->vertex_map[v]) << '\n';
  }
  for (std::size_t j = 0; j < p.num_edges(); ++j) out << "edge " << j << " -> " << emb->edge_map[j] << '\n';
  std::string s = out.str();
  s.pop_back();
  return negative(report, s);
}

// ---- oracle ----

struct OracleArgs {
  std::string kind;
  std::string input;
  int c = 2;
  std::size_t cap_vertices = 24;
  std::uint64_t cap = 1u << 24;
};

int cmd_oracle(const OracleArgs& a, RunReport& report) {
  Input in = load(a.input, report);
  std::optional<Coloring> col;
  if (a.kind == "2color") {
    col = brute_force_k_colorable(in.h, 2, a.cap_vertices);
  } else if (a.kind == "kcolor") {
    col = brute_force_k_colorable(in.h, a.c, a.cap_vertices);
  } else {
    col = brute_force_polychromatic(in.h, a.c, a.cap);
  }
  if (!col) return negative(report, "not colorable");
  std::cout << serialize_coloring(*col, in.h);
  report.outcome = "ok";
  return kOk;
}

void write_report(const std::string& path, const RunReport& r, double seconds) {
  nlohmann::json j{{"command", r.command},
                   {"input_digest", r.input_digest},
                   {"outcome", r.outcome},
                   {"detail", r.detail},
                   {"output", r.output_path},
                   {"wall_seconds", seconds}};
  std::ofstream(path) << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed hypergraph coloring toolkit"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "Write a JSON run report to this file");

  CheckArgs check;
  auto* sc_check = app.add_subcommand("check", "Test a hypergraph property");
  sc_check->add_option("property", check.property)
      ->required()
      ->check(CLI::IsMember({"property-s", "property-s-weak", "specboth", "linear", "poly",
                             "oriented", "two-one"}));
  sc_check->add_option("input", check.input, "Hypergraph file, - for stdin")->required();
  sc_check->add_option("--c", check.c, "Colors for the poly condition")->check(CLI::PositiveNumber);
  sc_check->add_option("--cap", check.cap, "Search node budget for the poly condition");

  ColorArgs color;
  auto* sc_color = app.add_subcommand("color", "Compute a verified coloring");
  sc_color->add_option("--algorithm", color.algorithm)
      ->check(CLI::IsMember({"auto", "main", "linear", "specboth", "poly"}));
  sc_color->add_option("input", color.input)->required();
  sc_color->add_option("-o,--output", color.output, "Coloring file (default stdout)");
  sc_color->add_option("--c", color.c, "Colors for --algorithm poly");
  sc_color->add_flag("--dump-structure", color.dump_structure,
                     "Print the decomposition to stderr (main algorithm)");

  GenArgs gen;
  auto* sc_gen = app.add_subcommand("gen", "Write a construction or pattern");
  sc_gen->add_option("name", gen.name)
      ->required()
      ->check(CLI::IsMember({"lower-bound", "oriented-lower-bound", "tightness", "star", "pattern"}));
  sc_gen->add_option("--n", gen.n);
  sc_gen->add_option("--k", gen.k);
  sc_gen->add_option("--pattern", gen.pattern)->check(CLI::IsMember(pattern_names()));
  sc_gen->add_option("-o,--output", gen.output);

  ContainsArgs contains;
  auto* sc_contains = app.add_subcommand("contains", "Search for a pattern");
  sc_contains->add_option("--pattern", contains.pattern)
      ->required()
      ->check(CLI::IsMember(pattern_names()));
  sc_contains->add_option("input", contains.input)->required();
  sc_contains->add_option("--cap", contains.cap, "Search node budget");

  OracleArgs oracle;
  auto* sc_oracle = app.add_subcommand("oracle", "Exhaustive colorability search");
  sc_oracle->add_option("kind", oracle.kind)
      ->required()
      ->check(CLI::IsMember({"2color", "kcolor", "poly"}));
  sc_oracle->add_option("input", oracle.input)->required();
  sc_oracle->add_option("--c", oracle.c)->check(CLI::PositiveNumber);
  sc_oracle->add_option("--cap-vertices", oracle.cap_vertices);
  sc_oracle->add_option("--cap", oracle.cap, "Budget on c^n for poly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  RunReport report;
  for (int i = 0; i < argc; ++i) report.command += (i ? " " : "") + std::string(argv[i]);
  auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (sc_check->parsed()) code = cmd_check(check, report);
    if (sc_color->parsed()) code = cmd_color(color, report);
    if (sc_gen->parsed()) code = cmd_gen(gen, report);
    if (sc_contains->parsed()) code = cmd_contains(contains, report);
    if (sc_oracle->parsed()) code = cmd_oracle(oracle, report);
  } catch (const ConditionViolated& e) {
    code = negative(report, e.what());
  } catch (const StructureViolated& e) {
    std::cerr << "structure violation: " << e.what() << '\n';
    report.outcome = "error";
    report.detail = e.what();
    code = kStructure;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    report.outcome = "error";
    report.detail = e.what();
    code = kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.outcome = "error";
    report.detail = e.what();
    code = kInputError;
  }
  if (!report_path.empty()) {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    write_report(report_path, report, dt.count());
  }
  return code;
}
