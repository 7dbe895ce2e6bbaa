// minpower: generate, solve, verify and benchmark Min-Power Strong
// Connectivity instances.
//
// Exit codes: 0 all certificates pass, 1 usage or I/O error, 2 certificate
// failure, 3 exact oracle requested but inconclusive or refused.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "minpower/exact.hpp"
#include "minpower/instances.hpp"
#include "minpower/report.hpp"

namespace {

using namespace minpower;

struct SolveFlags {
  bool exact = false;
  bool lp = false;
  int max_exact_n = 9;
  double tol = 1e-7;
  std::string format = "records";
  std::string out;
  bool timings = false;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--exact", exact, "Run the branch-and-bound oracle");
    cmd->add_flag("--lp", lp, "Compute the cut-relaxation lower bound");
    cmd->add_option("--max-exact-n", max_exact_n, "Largest instance handed to the oracle")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--tol", tol, "Cut violation tolerance for the LP bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "records"}));
    cmd->add_option("--out", out, "Write the report here instead of standard output");
    cmd->add_flag("--timings", timings, "Include per-phase wall-clock times in records");
  }

  SolveOptions options() const {
    SolveOptions o;
    o.exact = exact;
    o.lp = lp;
    o.max_exact_n = max_exact_n;
    o.tol = tol;
    return o;
  }
};

// Writes to --out when given, standard output otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit(std::ostream& out, const std::vector<RunReport>& reports, const SolveFlags& flags,
          bool with_summary) {
  if (flags.format == "table") {
    out << table_header() << '\n';
    for (const auto& r : reports) out << table_row(r) << '\n';
    if (with_summary) out << to_json(summarize(reports)).dump() << '\n';
  } else {
    for (const auto& r : reports) out << to_json(r, flags.timings).dump() << '\n';
    if (with_summary) out << to_json(summarize(reports)).dump() << '\n';
  }
}

int worst_status(const std::vector<RunReport>& reports, const SolveOptions& options) {
  int status = 0;
  for (const auto& r : reports) {
    int s = exit_status(r, options);
    if (s == 2 || (s == 3 && status == 0)) status = s;
  }
  return status;
}

int cmd_gen(const std::string& spec_text, const std::string& out, std::optional<std::uint64_t> seed) {
  GeneratorSpec spec = parse_generator_spec(spec_text);
  if (seed) spec.seed = *seed;
  Generated g = generate(spec);
  write_instance(g.instance, out, to_string(spec));
  if (g.witness) write_assignment(*g.witness, out + ".witness");
  return 0;
}

int cmd_solve(const std::string& path, const SolveFlags& flags) {
  Instance inst = read_instance(path);
  SolveOptions options = flags.options();
  RunReport report = solve_instance(inst, options, path, read_instance_comment(path));
  if (report.exact == OracleOutcome::refused)
    std::cerr << "minpower: exact oracle skipped, " << report.n << " vertices exceeds --max-exact-n "
              << options.max_exact_n << '\n';
  Sink sink(flags.out);
  emit(sink.stream(), {report}, flags, false);
  return exit_status(report, options);
}

int cmd_verify(const std::string& instance_path, const std::string& assignment_path) {
  Instance inst = read_instance(instance_path);
  PowerAssignment p = read_assignment(assignment_path, inst.num_vertices());
  bool ok = verify_assignment(inst, p);
  std::cout.precision(17);
  std::cout << (ok ? "PASS" : "FAIL") << " strongly_connected=" << (ok ? "true" : "false")
            << " total_power=" << p.total() << '\n';
  return ok ? 0 : 2;
}

int cmd_bench(const std::vector<std::string>& specs, int seeds, std::uint64_t base_seed,
              const SolveFlags& flags) {
  SolveOptions options = flags.options();
  std::vector<RunReport> reports;
  for (const std::string& text : specs) {
    GeneratorSpec spec = parse_generator_spec(text);
    const int runs = spec.family == Family::random_geometric ? seeds : 1;
    for (int k = 0; k < runs; ++k) {
      if (spec.family == Family::random_geometric) spec.seed = base_seed + k;
      Generated g = generate(spec);
      std::string label = to_string(spec);
      reports.push_back(solve_instance(g.instance, options, label, label));
    }
  }
  Sink sink(flags.out);
  emit(sink.stream(), reports, flags, true);
  return worst_status(reports, options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Min-Power Strong Connectivity: greedy star cover, MST baseline, exact oracle, LP bound"};
  app.require_subcommand(1);

  std::string gen_spec, gen_out;
  std::optional<std::uint64_t> gen_seed;
  auto* gen = app.add_subcommand("gen", "Generate an instance file (polygon also writes <out>.witness)");
  gen->add_option("--spec", gen_spec, "Generator spec, e.g. family=line,n=20,eps=0.01")->required();
  gen->add_option("--out", gen_out, "Instance file to write")->required();
  gen->add_option("--seed", gen_seed, "Override the spec's seed");

  std::string solve_path;
  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Run MST baseline and greedy on an instance file");
  solve->add_option("instance", solve_path, "Instance file")->required()->check(CLI::ExistingFile);
  solve_flags.attach(solve);

  std::string verify_instance, verify_assignment_path;
  auto* verify = app.add_subcommand("verify", "Check that a power assignment is strongly connected");
  verify->add_option("instance", verify_instance, "Instance file")->required()->check(CLI::ExistingFile);
  verify->add_option("assignment", verify_assignment_path, "Assignment file, one 'v power' per line")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<std::string> bench_specs;
  int bench_seeds = 1;
  std::uint64_t bench_seed = 1;
  SolveFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Solve a family sweep and summarize the ratios");
  bench->add_option("--spec", bench_specs, "Generator spec (repeatable)")->required();
  bench->add_option("--seeds", bench_seeds, "Seeds per random-family spec")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "First seed");
  bench_flags.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) return cmd_gen(gen_spec, gen_out, gen_seed);
    if (*solve) return cmd_solve(solve_path, solve_flags);
    if (*verify) return cmd_verify(verify_instance, verify_assignment_path);
    if (*bench) return cmd_bench(bench_specs, bench_seeds, bench_seed, bench_flags);
  } catch (const std::exception& e) {
    std::cerr << "minpower: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
