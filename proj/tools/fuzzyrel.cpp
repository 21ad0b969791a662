#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fuzzyrel/automata.hpp"
#include "fuzzyrel/io.hpp"
#include "fuzzyrel/oracle.hpp"
#include "fuzzyrel/quotient.hpp"
#include "fuzzyrel/solver.hpp"

namespace {

using namespace fuzzyrel;
using io::Json;

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kCapReached = 2,
  kParseError = 3,
  kShapeError = 4,
  kOtherError = 5,
};

struct Common {
  std::string output;
  bool decimal = false;
  std::size_t max_iters = 0;

  io::Format format() const { return io::Format{decimal}; }

  void apply(SolveOptions& opts) const {
    if (max_iters > 0) opts.max_iterations = max_iters;
  }

  void emit(const Json& doc) const {
    const std::string text = io::dump(doc);
    if (output.empty() || output == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(output);
    if (!out) throw Error(ErrorKind::Parse, output + ": cannot write file");
    out << text;
  }
};

int exit_for(SolveStatus status) { return status == SolveStatus::Stabilized ? kOk : kCapReached; }

int cmd_solve(const std::string& path, const std::optional<std::string>& variant, bool crisp,
              bool with_oracle, const Common& common) {
  io::Instance inst = io::read_instance(path, variant);
  common.apply(inst.options);
  const SolveReport report =
      crisp ? solve_greatest_crisp(inst.system) : solve_greatest(inst.system, inst.options);
  Json doc = io::report_json(inst.system, report, common.format());
  if (crisp) doc["crisp"] = true;
  if (with_oracle) {
    const FuzzyRelation g = oracle::brute_force_greatest(inst.system);
    doc["oracle"] = io::matrix_json(g, common.format());
    doc["oracle_agrees"] = crisp ? leq(report.solution, g) : g == report.solution;
  }
  common.emit(doc);
  return exit_for(report.status);
}

int cmd_check(const std::string& path, const std::string& candidate_path,
              const std::optional<std::string>& variant, const Common& common) {
  const io::Instance inst = io::read_instance(path, variant);
  const auto& sys = inst.system;
  const FuzzyRelation candidate =
      io::read_relation(candidate_path, sys.lattice(), sys.a_labels(), sys.b_labels());
  const bool ok = verify_solution(sys, candidate);
  Json doc;
  doc["variant"] = sys.kind().name();
  doc["verified"] = ok;
  common.emit(doc);
  return ok ? kOk : kCheckFailed;
}

int cmd_quotient(const std::string& path, const Common& common) {
  const io::QuotientRequest req = io::read_quotient_request(path);
  common.emit(io::quotient_json(quotient_system(req.system, req.equivalence), common.format()));
  return kOk;
}

int cmd_reduce(const std::string& path, const std::string& mode, const Common& common) {
  const FuzzyAutomaton m = io::read_automaton(path);
  SolveOptions opts;
  common.apply(opts);
  const auto bisim = greatest_bisimulation_equivalence(
      m, mode == "forward" ? BisimulationMode::Forward : BisimulationMode::Backward, opts);
  Json doc;
  doc["mode"] = mode;
  doc["iterations"] = bisim.report.iterations;
  doc["status"] = to_string(bisim.report.status);
  doc["equivalence"] = io::matrix_json(bisim.report.solution, common.format());
  if (bisim.equivalence) {
    const ReducedAutomaton r = reduce(m, *bisim.equivalence);
    Json classes = Json::array();
    const Labels labels = r.factor.labels();
    for (std::size_t c = 0; c < r.factor.size(); ++c) {
      Json members = Json::array();
      for (std::size_t a : r.factor.classes()[c]) members.push_back(m.states()[a]);
      classes.push_back(Json{{"label", labels[c]}, {"members", std::move(members)}});
    }
    doc["classes"] = std::move(classes);
    doc["construction"] = kFactorAutomatonConstruction;
    doc["automaton"] = io::automaton_json(r.automaton, common.format());
  }
  common.emit(doc);
  return exit_for(bisim.report.status);
}

int cmd_bisim(const std::string& m_path, const std::string& n_path, const std::string& variant,
              const std::optional<std::string>& bound_path, const Common& common) {
  const FuzzyAutomaton m = io::read_automaton(m_path);
  const FuzzyAutomaton n = io::read_automaton(n_path);
  SystemKind kind{Family::Heterogeneous, 1};
  try {
    kind = variant.find('-') == std::string::npos ? SystemKind{Family::Heterogeneous, std::stoi(variant)}
                                                   : SystemKind::parse(variant);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "--variant: expected 1..6 or wl2-<t>");
  }
  if (kind.family != Family::Heterogeneous) {
    throw Error(ErrorKind::Parse, "--variant: automata are compared with a wl2 system");
  }
  std::optional<FuzzyRelation> z;
  if (bound_path) z = io::read_relation(*bound_path, m.lattice(), m.states(), n.states());
  SolveOptions opts;
  common.apply(opts);
  const SolveReport report = solve_between(m, n, kind.variant, z, opts);
  const auto system = WeaklyLinearSystem::heterogeneous(
      kind.variant, m.transitions(), n.transitions(),
      z ? z->relabeled(m.states(), n.states())
        : FuzzyRelation::universal(m.lattice(), m.states(), n.states()));
  common.emit(io::report_json(system, report, common.format()));
  return exit_for(report.status);
}

void add_common(CLI::App* cmd, Common& common, bool iterates) {
  cmd->add_option("-o,--output", common.output, "Write the result here instead of stdout");
  cmd->add_flag("--decimal", common.decimal, "Render scalars as decimals where exact");
  if (iterates) {
    cmd->add_option("--max-iters", common.max_iters, "Iteration cap")->check(CLI::PositiveNumber);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greatest solutions of weakly linear fuzzy relation systems"};
  app.require_subcommand(1);
  Common common;

  std::string path, second;
  std::optional<std::string> variant, bound;
  bool crisp = false, with_oracle = false;
  std::string mode = "forward";
  std::string bisim_variant;

  auto* solve = app.add_subcommand("solve", "Compute the greatest solution of a system");
  solve->add_option("instance", path, "System instance file")->required();
  solve->add_option("--variant", variant, "Override the variant, e.g. wl2-3");
  solve->add_flag("--crisp", crisp, "Greatest crisp solution");
  solve->add_flag("--oracle", with_oracle)->group("");
  add_common(solve, common, true);

  auto* check = app.add_subcommand("check", "Verify a candidate solution");
  check->add_option("instance", path, "System instance file")->required();
  check->add_option("candidate", second, "Candidate matrix file")->required();
  check->add_option("--variant", variant, "Override the variant");
  add_common(check, common, false);

  auto* quot = app.add_subcommand("quotient", "Quotient of a fuzzy relational system");
  quot->add_option("file", path, "System and equivalence file")->required();
  add_common(quot, common, false);

  auto* red = app.add_subcommand("reduce", "Reduce an automaton by its greatest bisimulation equivalence");
  red->add_option("automaton", path, "Automaton file")->required();
  red->add_option("--mode", mode, "forward or backward")
      ->check(CLI::IsMember({"forward", "backward"}));
  add_common(red, common, true);

  auto* bis = app.add_subcommand("bisim", "Greatest simulation/bisimulation between two automata");
  bis->add_option("M", path, "First automaton")->required();
  bis->add_option("N", second, "Second automaton")->required();
  bis->add_option("--variant", bisim_variant, "1..6 or wl2-<t>")->required();
  bis->add_option("--bound", bound, "Bound matrix Z (universal when absent)");
  add_common(bis, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*solve) return cmd_solve(path, variant, crisp, with_oracle, common);
    if (*check) return cmd_check(path, second, variant, common);
    if (*quot) return cmd_quotient(path, common);
    if (*red) return cmd_reduce(path, mode, common);
    if (*bis) return cmd_bisim(path, second, bisim_variant, bound, common);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse: return kParseError;
      case ErrorKind::ShapeMismatch:
      case ErrorKind::StructureMismatch: return kShapeError;
      default: return kOtherError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOtherError;
  }
  return kOtherError;
}
