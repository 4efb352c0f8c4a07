// Command-line front end: every subcommand prints one JSON report to
// stdout (or, for witness, the path itself) and exits 0 on success, 1
// when a verification fails, 2 on usage or input-format problems.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "visicube/daisy.hpp"
#include "visicube/errors.hpp"
#include "visicube/exact.hpp"
#include "visicube/io.hpp"
#include "visicube/mv_build.hpp"
#include "visicube/mv_color.hpp"
#include "visicube/oracles.hpp"
#include "visicube/repro.hpp"
#include "visicube/total_mv.hpp"
#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"
#include "visicube/visibility.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace visicube;

constexpr int kReportSchemaVersion = 1;

// Exhaustive pair-by-pair visibility sweeps get slow past this point;
// bigger runs have to settle for structural verification.
constexpr int kExhaustiveMvCap = 11;

enum class VerifyLevel { none, structural, exhaustive };

const std::map<std::string, VerifyLevel> kVerifyNames{
    {"none", VerifyLevel::none},
    {"structural", VerifyLevel::structural},
    {"exhaustive", VerifyLevel::exhaustive}};

int g_threads = 0;  // 0: fall back to VISICUBE_THREADS, then 1

int resolve_threads() {
  if (g_threads > 0) return g_threads;
  if (const char* env = std::getenv("VISICUBE_THREADS")) {
    if (int v = std::atoi(env); v > 0) return v;
  }
  return 1;
}

json base_report(const std::string& command) {
  json rep;
  rep["schema_version"] = kReportSchemaVersion;
  rep["tool_version"] = VISICUBE_VERSION_STRING;
  rep["command"] = command;
  return rep;
}

json rational_json(const Rational& q) {
  return json{{"exact", numerator(q).str() + "/" + denominator(q).str()},
              {"decimal", to_decimal_string(q, 10)}};
}

json set_json(const VertexSet& s) {
  json verts = json::array();
  for (Vertex v : s.members()) verts.push_back(to_bitstring(v, s.dimension()));
  return json{{"dimension", s.dimension()}, {"size", s.size()},
              {"vertices", std::move(verts)}};
}

void emit(const json& rep) { std::cout << rep.dump(2) << '\n'; }

Vertex parse_bitstring_arg(const std::string& text, int n, const char* flag) {
  if (text.size() != static_cast<std::size_t>(n)) {
    throw CLI::ValidationError(std::string(flag) + ": expected " +
                               std::to_string(n) + " characters, got " +
                               std::to_string(text.size()));
  }
  Vertex v = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v |= bit(static_cast<int>(i) + 1);
    } else if (text[i] != '0') {
      throw CLI::ValidationError(std::string(flag) + ": invalid character '" +
                                 text[i] + "' at position " +
                                 std::to_string(i + 1));
    }
  }
  return v;
}

// ---- turan ----------------------------------------------------------

struct TuranArgs {
  int n = 0, r = 0, s = 0, t = 0;
  int budget_ms = static_cast<int>(kDefaultTuranBudget.count());
  std::string family_out;
};

int run_turan(const TuranArgs& a) {
  TuranRecord rec =
      turan_exact(a.n, a.r, a.s, a.t, std::chrono::milliseconds(a.budget_ms));
  json rep = base_report("turan");
  rep["config"] = {{"n", a.n}, {"r", a.r}, {"s", a.s}, {"t", a.t},
                   {"budget_ms", a.budget_ms}};
  rep["results"] = {{"value", rec.value},
                    {"layer_size", binomial(a.n, a.r)},
                    {"density", rational_json(rec.density())},
                    {"optimal", rec.optimal},
                    {"nodes_explored", rec.nodes_explored}};
  if (!a.family_out.empty()) {
    write_vertex_file(a.family_out, rec.extremal_family.members,
                      "daisy-free family, layer " + std::to_string(a.r) +
                          " of Q_" + std::to_string(a.n));
    rep["certificates"] = {{"family", a.family_out}};
  } else {
    rep["certificates"] = {{"family", set_json(rec.extremal_family.members)}};
  }
  emit(rep);
  return 0;
}

// ---- build-mv -------------------------------------------------------

struct BuildArgs {
  int n = 0, d = 3, lambda = 0;
  std::string supplier = "greedy";
  int budget_ms = static_cast<int>(kDefaultTuranBudget.count());
  std::vector<std::string> family_args;  // LAYER=PATH, file supplier only
  std::string out;
  VerifyLevel verify = VerifyLevel::structural;
};

FamilySupplier make_supplier(const BuildArgs& a) {
  if (a.supplier == "greedy") return greedy_supplier();
  if (a.supplier == "empty") return empty_supplier();
  if (a.supplier == "exact") {
    return exact_supplier(std::chrono::milliseconds(a.budget_ms));
  }
  std::map<int, LayerFamily> families;
  for (const std::string& entry : a.family_args) {
    auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--family expects LAYER=PATH, got '" + entry +
                                 "'");
    }
    int layer = 0;
    try {
      layer = std::stoi(entry.substr(0, eq));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--family: bad layer number in '" + entry +
                                 "'");
    }
    VertexSet s = read_vertex_file(entry.substr(eq + 1), a.n);
    families.insert({layer, LayerFamily{a.n, layer, std::move(s)}});
  }
  return fixed_supplier(std::move(families));
}

int run_build_mv(const BuildArgs& a) {
  if (a.lambda < 0 || a.lambda >= a.d) {
    throw CLI::ValidationError("--lambda must lie in [0, d)");
  }
  if (a.supplier == "file" && a.family_args.empty()) {
    throw CLI::ValidationError("--supplier file needs at least one --family");
  }
  if (a.verify == VerifyLevel::exhaustive && a.n > kExhaustiveMvCap) {
    throw CLI::ValidationError("exhaustive verification is capped at n <= " +
                               std::to_string(kExhaustiveMvCap));
  }

  FamilySupplier supplier = make_supplier(a);
  LayeredConstruction k = build_layered_set(a.n, a.d, a.lambda, supplier);
  VertexSet m = k.as_vertex_set();

  json rep = base_report("build-mv");
  rep["config"] = {{"n", a.n}, {"d", a.d}, {"lambda", a.lambda},
                   {"supplier", a.supplier}, {"verify",
                    a.verify == VerifyLevel::none ? "none"
                    : a.verify == VerifyLevel::structural ? "structural"
                                                          : "exhaustive"}};
  json layers = json::object();
  for (const auto& [r, fam] : k.families) {
    layers[std::to_string(r)] = fam.size();
  }
  rep["results"] = {{"size", k.size()},
                    {"layer_sizes", std::move(layers)},
                    {"fraction_of_cube",
                     rational_json(Rational(BigInt(k.size()),
                                            BigInt(1) << a.n))}};

  // The averaging bound needs a family size for every middle layer, not
  // just the selected ones, so it only makes sense for the suppliers
  // that can produce any layer on demand.
  if (a.supplier == "greedy" || a.supplier == "exact") {
    std::map<int, std::uint64_t> ex_values;
    for (int r = a.d; r <= a.n - a.d; ++r) {
      ex_values[r] = supplier(a.n, r, 2 * a.d, a.d).size();
    }
    BoundReport bound = layered_size_bound(a.n, a.d, ex_values);
    rep["results"]["averaged_lower_bound"] = rational_json(bound.total);
    rep["results"]["bound_fraction_of_cube"] =
        rational_json(bound.fraction_of_cube);
  }

  bool verified = true;
  if (a.verify == VerifyLevel::exhaustive) {
    if (auto bad = mv_violation(m, resolve_threads())) {
      verified = false;
      rep["verification"] = {
          {"mode", "exhaustive"},
          {"verified", false},
          {"invisible_pair", {to_bitstring(bad->u, a.n), to_bitstring(bad->v, a.n)}}};
    } else {
      rep["verification"] = {{"mode", "exhaustive"}, {"verified", true}};
    }
  } else {
    // build_layered_set re-validates layer structure and daisy-freeness
    // before returning, so structural verification already happened.
    rep["verification"] = {{"mode", "structural"}, {"verified", true}};
  }

  if (!a.out.empty()) {
    write_vertex_file(a.out, m,
                      "layered MV construction n=" + std::to_string(a.n) +
                          " d=" + std::to_string(a.d) +
                          " lambda=" + std::to_string(a.lambda));
    rep["certificates"] = {{"set", a.out}};
  }
  emit(rep);
  return verified ? 0 : 1;
}

// ---- witness --------------------------------------------------------

struct WitnessArgs {
  std::string set_file;
  int d = 3;
  std::string a_bits, b_bits;
};

int run_witness(const WitnessArgs& w) {
  VertexSet m = read_vertex_file(w.set_file);
  const int n = m.dimension();
  Vertex a = parse_bitstring_arg(w.a_bits, n, "--a");
  Vertex b = parse_bitstring_arg(w.b_bits, n, "--b");
  if (m.size() == 0) {
    throw CLI::ValidationError("--set: empty set has no members to connect");
  }

  // Rebuild the layered structure the set came from: all weights must
  // share one residue mod d, and the per-layer slices must pass the
  // construction invariants.
  const int residue = weight(m.members().front()) % w.d;
  std::map<int, LayerFamily> families;
  for (Vertex v : m.members()) {
    const int r = weight(v);
    if (r % w.d != residue) {
      throw InvalidFamily("set mixes layer residues " +
                          std::to_string(residue) + " and " +
                          std::to_string(r % w.d) + " mod " +
                          std::to_string(w.d));
    }
    auto [it, fresh] = families.try_emplace(r, LayerFamily::empty(n, r));
    it->second.members.insert(v);
  }
  LayeredConstruction k{n, w.d, residue, std::move(families)};
  k.validate();

  Path p = witness_path(a, b, k);
  if (!p.shortest() || !p.internally_avoids(m)) {
    std::cerr << "error: produced path failed its own verification\n";
    return 1;
  }
  for (Vertex v : p.vertices) {
    std::cout << to_bitstring(v, n) << '\n';
  }
  return 0;
}

// ---- color ----------------------------------------------------------

struct ColorArgs {
  int n = 0, d = 3;
  std::uint64_t seed = 0;
  std::uint64_t max_rounds = 100'000;
  std::string out_prefix;
  VerifyLevel verify = VerifyLevel::structural;
};

int run_color(const ColorArgs& a) {
  if (a.verify == VerifyLevel::exhaustive && a.n > kColoringCheckDimensionCap) {
    throw CLI::ValidationError("exhaustive verification is capped at n <= " +
                               std::to_string(kColoringCheckDimensionCap));
  }
  Coloring start = layered_coloring(a.n, a.d, a.seed);
  RepairOutcome out = moser_tardos_repair(start, a.max_rounds, a.seed);

  json rep = base_report("color");
  rep["config"] = {{"n", a.n}, {"d", a.d}, {"seed", a.seed},
                   {"max_rounds", a.max_rounds}};
  json classes = json::array();
  for (const VertexSet& cls : out.coloring.classes()) {
    classes.push_back(cls.size());
  }
  rep["results"] = {{"class_sizes", std::move(classes)},
                    {"rounds", out.rounds},
                    {"converged", out.converged}};

  bool verified = out.converged;
  if (verified && a.verify == VerifyLevel::exhaustive) {
    if (auto bad = coloring_violation(out.coloring, resolve_threads())) {
      verified = false;
      rep["verification"] = {
          {"mode", "exhaustive"},
          {"verified", false},
          {"color_id", bad->color_id},
          {"invisible_pair",
           {to_bitstring(bad->pair.u, a.n), to_bitstring(bad->pair.v, a.n)}}};
    } else {
      rep["verification"] = {{"mode", "exhaustive"}, {"verified", true}};
    }
  } else if (verified) {
    verified = !first_monochromatic_daisy(out.coloring).has_value();
    rep["verification"] = {{"mode", "structural"}, {"verified", verified}};
  } else {
    rep["verification"] = {{"mode", "none"}, {"verified", false},
                           {"reason", "repair did not converge"}};
  }

  if (!a.out_prefix.empty()) {
    json files = json::object();
    for (int id = 0; id < out.coloring.color_count(); ++id) {
      VertexSet cls = out.coloring.class_members(id);
      if (cls.size() == 0) continue;
      std::string path = a.out_prefix + "-" + std::to_string(id) + ".txt";
      write_vertex_file(path, cls, "color class " + std::to_string(id));
      files[std::to_string(id)] = path;
    }
    rep["certificates"] = std::move(files);
  }
  emit(rep);
  return verified ? 0 : 1;
}

// ---- total ----------------------------------------------------------

struct TotalArgs {
  int n = 0;
  int hamming_m = 0;  // 0: not requested
  bool partition = false;
  std::string out_prefix;
  VerifyLevel verify = VerifyLevel::structural;
};

int run_total(const TotalArgs& a) {
  json rep = base_report("total");
  bool verified = true;

  auto exhaustive_ok = [&](const VertexSet& s) {
    if (a.verify != VerifyLevel::exhaustive) return true;
    if (s.dimension() > kTotalCheckDimensionCap) {
      throw CLI::ValidationError("exhaustive verification is capped at n <= " +
                                 std::to_string(kTotalCheckDimensionCap));
    }
    return is_total_mv_set(s);
  };

  if (a.hamming_m > 0) {
    const int code_n = (1 << a.hamming_m) - 1;
    if (a.n != 0 && a.n != code_n) {
      throw CLI::ValidationError("--n disagrees with --hamming-m (code lives in Q_" +
                                 std::to_string(code_n) + ")");
    }
    VertexSet code = hamming_code(a.hamming_m);
    verified = avoids_distance2(code) && exhaustive_ok(code);
    rep["config"] = {{"hamming_m", a.hamming_m}, {"n", code_n}};
    rep["results"] = {{"size", code.size()},
                      {"perfect_size", (std::uint64_t{1} << code_n) / (code_n + 1)},
                      {"verified", verified}};
    if (!a.out_prefix.empty()) {
      std::string path = a.out_prefix + "-code.txt";
      write_vertex_file(path, code,
                        "Hamming code, m = " + std::to_string(a.hamming_m));
      rep["certificates"] = {{"code", path}};
    }
  } else if (a.partition) {
    std::vector<PartitionClass> classes = total_mv_partition(a.n);
    json sizes = json::array();
    json files = json::object();
    for (const PartitionClass& c : classes) {
      verified = verified && avoids_distance2(c.members) &&
                 exhaustive_ok(c.members);
      std::string label = std::to_string(c.residue) + c.side;
      sizes.push_back(json{{"class", label}, {"size", c.members.size()}});
      if (!a.out_prefix.empty()) {
        std::string path = a.out_prefix + "-" + label + ".txt";
        write_vertex_file(path, c.members, "partition class " + label);
        files[label] = path;
      }
    }
    rep["config"] = {{"n", a.n}, {"partition", true}};
    rep["results"] = {{"class_count", classes.size()},
                      {"class_limit", 2 * a.n},
                      {"classes", std::move(sizes)},
                      {"verified", verified}};
    if (!a.out_prefix.empty()) rep["certificates"] = std::move(files);
  } else {
    TotalMvConstruction ab = build_ab(a.n);
    verified = avoids_distance2(ab.group_a) && avoids_distance2(ab.group_b) &&
               exhaustive_ok(ab.group_a) && exhaustive_ok(ab.group_b);
    std::uint64_t bigger = std::max(ab.group_a.size(), ab.group_b.size());
    rep["config"] = {{"n", a.n}};
    rep["results"] = {
        {"size_a", ab.group_a.size()},
        {"size_b", ab.group_b.size()},
        {"guaranteed_lower_bound",
         rational_json(Rational(BigInt(1) << (a.n - 1), BigInt(a.n)))},
        {"best_size", bigger},
        {"verified", verified}};
    if (!a.out_prefix.empty()) {
      std::string pa = a.out_prefix + "-A.txt";
      std::string pb = a.out_prefix + "-B.txt";
      write_vertex_file(pa, ab.group_a, "group A");
      write_vertex_file(pb, ab.group_b, "group B");
      rep["certificates"] = {{"group_a", pa}, {"group_b", pb}};
    }
  }
  emit(rep);
  return verified ? 0 : 1;
}

// ---- solve ----------------------------------------------------------

struct SolveArgs {
  std::string param;
  int n = 0;
  int budget_ms = static_cast<int>(kDefaultSolveBudget.count());
  std::string certificate_out;
};

int run_solve(const SolveArgs& a) {
  const std::chrono::milliseconds budget(a.budget_ms);
  SolveResult r;
  if (a.param == "mu") {
    r = max_mv(a.n, budget);
  } else if (a.param == "mut") {
    r = max_total_mv(a.n);
  } else if (a.param == "chimu") {
    r = chromatic_mv(a.n, budget);
  } else {
    r = chromatic_total_mv(a.n, budget);
  }

  // Certificates come from the solver's own incremental checks; redo
  // the judgement with the standalone verifiers before reporting.
  bool verified = true;
  if (a.param == "mu") {
    verified = is_mv_set(r.certificate.at(0), resolve_threads());
  } else if (a.param == "mut") {
    verified = avoids_distance2(r.certificate.at(0));
  } else {
    std::uint64_t covered = 0;
    for (const VertexSet& cls : r.certificate) {
      covered += cls.size();
      verified = verified && (a.param == "chimu"
                                  ? is_mv_set(cls, resolve_threads())
                                  : avoids_distance2(cls));
    }
    verified = verified && covered == (std::uint64_t{1} << a.n);
  }

  json rep = base_report("solve");
  rep["config"] = {{"param", a.param}, {"n", a.n}, {"budget_ms", a.budget_ms}};
  json sizes = json::array();
  for (const VertexSet& cls : r.certificate) sizes.push_back(cls.size());
  rep["results"] = {{"parameter", std::string(parameter_label(r.parameter))},
                    {"value", r.value},
                    {"optimal", r.optimal},
                    {"nodes_explored", r.nodes_explored},
                    {"certificate_sizes", std::move(sizes)},
                    {"verified", verified}};
  rep["timings"] = {{"elapsed_seconds", r.elapsed_seconds}};

  if (!a.certificate_out.empty()) {
    json files = json::array();
    for (std::size_t i = 0; i < r.certificate.size(); ++i) {
      std::string path =
          a.certificate_out + "-" + std::to_string(i) + ".txt";
      write_vertex_file(path, r.certificate[i],
                        std::string(parameter_label(r.parameter)) +
                            " certificate part " + std::to_string(i));
      files.push_back(path);
    }
    rep["certificates"] = std::move(files);
  }
  emit(rep);
  return verified ? 0 : 1;
}

// ---- repro ----------------------------------------------------------

struct ReproArgs {
  std::string suite = "paper";
  int max_n = 0;
  std::uint64_t seed = ReproOptions{}.base_seed;
  bool as_json = false;
};

int run_repro(const ReproArgs& a) {
  ReproOptions opt;
  opt.max_n = a.max_n;
  opt.base_seed = a.seed;
  opt.threads = resolve_threads();
  opt.progress = &std::cerr;

  std::vector<CriterionResult> results = run_acceptance_suite(opt);
  if (a.as_json) {
    json rep = base_report("repro");
    rep["config"] = {{"suite", a.suite}, {"max_n", a.max_n}, {"seed", a.seed},
                     {"threads", opt.threads}};
    json items = json::array();
    for (const CriterionResult& r : results) {
      items.push_back(json{{"index", r.index},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
    }
    rep["results"] = std::move(items);
    rep["all_passed"] = all_passed(results);
    emit(rep);
  } else {
    std::cout << summary_table(results);
    std::cout << (all_passed(results) ? "all criteria passed\n"
                                      : "FAILURES present\n");
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutual-visibility sets on hypercubes: build, verify, solve"};
  app.require_subcommand(1);
  app.add_option("--threads", g_threads,
                 "worker threads for visibility sweeps (default: "
                 "VISICUBE_THREADS or 1)");

  TuranArgs turan_args;
  auto* turan_cmd = app.add_subcommand(
      "turan", "exact largest daisy-free family in one layer");
  turan_cmd->add_option("--n", turan_args.n, "cube dimension")
      ->required()->check(CLI::Range(1, kMaxDimension));
  turan_cmd->add_option("--r", turan_args.r, "layer")->required();
  turan_cmd->add_option("--s", turan_args.s, "daisy petal count parameter")
      ->required();
  turan_cmd->add_option("--t", turan_args.t, "daisy petal size parameter")
      ->required();
  turan_cmd->add_option("--budget-ms", turan_args.budget_ms, "search budget");
  turan_cmd->add_option("--family-out", turan_args.family_out,
                        "write the extremal family here");

  BuildArgs build_args;
  auto* build_cmd =
      app.add_subcommand("build-mv", "layered mutual-visibility construction");
  build_cmd->add_option("--n", build_args.n, "cube dimension")
      ->required()->check(CLI::Range(1, kMaxDimension));
  build_cmd->add_option("--d", build_args.d, "layer spacing")->check(CLI::Range(3, 31));
  build_cmd->add_option("--lambda", build_args.lambda, "layer residue mod d")
      ->required();
  build_cmd->add_option("--supplier", build_args.supplier, "middle-layer family source")
      ->check(CLI::IsMember({"greedy", "exact", "empty", "file"}));
  build_cmd->add_option("--budget-ms", build_args.budget_ms,
                        "per-layer budget for the exact supplier");
  build_cmd->add_option("--family", build_args.family_args,
                        "LAYER=PATH family file (repeatable, file supplier)");
  build_cmd->add_option("--out", build_args.out, "write the set here");
  build_cmd->add_option("--verify", build_args.verify, "verification level")
      ->transform(CLI::CheckedTransformer(kVerifyNames));

  WitnessArgs witness_args;
  auto* witness_cmd = app.add_subcommand(
      "witness", "shortest path between two members avoiding the set");
  witness_cmd->add_option("--set", witness_args.set_file, "vertex set file")
      ->required();
  witness_cmd->add_option("--d", witness_args.d, "layer spacing of the set")
      ->check(CLI::Range(3, 31));
  witness_cmd->add_option("--a", witness_args.a_bits, "first endpoint bitstring")
      ->required();
  witness_cmd->add_option("--b", witness_args.b_bits, "second endpoint bitstring")
      ->required();

  ColorArgs color_args;
  auto* color_cmd = app.add_subcommand(
      "color", "randomized layered coloring with resampling repair");
  color_cmd->add_option("--n", color_args.n, "cube dimension")
      ->required()->check(CLI::Range(6, 30));
  color_cmd->add_option("--d", color_args.d, "layer spacing")->check(CLI::Range(3, 15));
  color_cmd->add_option("--seed", color_args.seed, "coin seed");
  color_cmd->add_option("--max-rounds", color_args.max_rounds, "resampling cap");
  color_cmd->add_option("--out-prefix", color_args.out_prefix,
                        "write class files PREFIX-<id>.txt");
  color_cmd->add_option("--verify", color_args.verify, "verification level")
      ->transform(CLI::CheckedTransformer(kVerifyNames));

  TotalArgs total_args;
  auto* total_cmd = app.add_subcommand(
      "total", "total-visibility constructions and partitions");
  total_cmd->add_option("--n", total_args.n, "cube dimension")
      ->check(CLI::Range(1, 30));
  total_cmd->add_option("--hamming-m", total_args.hamming_m,
                        "build the Hamming code with this many parity bits")
      ->check(CLI::Range(2, 4));
  total_cmd->add_flag("--partition", total_args.partition,
                      "partition the whole cube instead");
  total_cmd->add_option("--out-prefix", total_args.out_prefix,
                        "write construction files with this prefix");
  total_cmd->add_option("--verify", total_args.verify, "verification level")
      ->transform(CLI::CheckedTransformer(kVerifyNames));

  SolveArgs solve_args;
  auto* solve_cmd =
      app.add_subcommand("solve", "exact optimum with certificate");
  solve_cmd->add_option("--param", solve_args.param, "which optimum")
      ->required()
      ->check(CLI::IsMember({"mu", "mut", "chimu", "chimut"}));
  solve_cmd->add_option("--n", solve_args.n, "cube dimension")
      ->required()->check(CLI::Range(1, 30));
  solve_cmd->add_option("--budget-ms", solve_args.budget_ms, "search budget");
  solve_cmd->add_option("--certificate-out", solve_args.certificate_out,
                        "write certificate files PREFIX-<i>.txt");

  ReproArgs repro_args;
  auto* repro_cmd =
      app.add_subcommand("repro", "run the full acceptance suite");
  repro_cmd->add_option("--suite", repro_args.suite, "which suite")
      ->check(CLI::IsMember({"paper"}));
  repro_cmd->add_option("--max-n", repro_args.max_n,
                        "clamp sweeps to this dimension (0: full)");
  repro_cmd->add_option("--seed", repro_args.seed, "base seed");
  repro_cmd->add_flag("--json", repro_args.as_json, "emit JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    app.exit(e);
    return 2;
  }

  try {
    if (*turan_cmd) return run_turan(turan_args);
    if (*build_cmd) return run_build_mv(build_args);
    if (*witness_cmd) return run_witness(witness_args);
    if (*color_cmd) return run_color(color_args);
    if (*total_cmd) return run_total(total_args);
    if (*solve_cmd) return run_solve(solve_args);
    if (*repro_cmd) return run_repro(repro_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ScaleCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;  // no subcommand, though require_subcommand should catch it
}
