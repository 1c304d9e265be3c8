// nnroute: qubit routing for linear nearest-neighbor architectures.
//
// Subcommands: solve, export-lp, verify, bench.
// Exit codes: 0 ok, 1 input error, 2 timeout without result, 3 verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nnroute/assignment.hpp"
#include "nnroute/bench.hpp"
#include "nnroute/decompose.hpp"
#include "nnroute/emit.hpp"
#include "nnroute/ilp.hpp"
#include "nnroute/real.hpp"
#include "nnroute/schedule.hpp"
#include "nnroute/solver.hpp"

using json = nlohmann::json;
using namespace nnroute;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitVerify = 3;

struct CircuitInput {
  std::string real_path;
  int qft_n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", real_path, ".real circuit file");
    cmd->add_option("--qft", qft_n, "use the n-qubit QFT instead of a file")
        ->check(CLI::Range(2, 16));
  }

  QuantumCircuit load(DecomposeStats* stats = nullptr) const {
    if ((qft_n > 0) == !real_path.empty())
      throw std::invalid_argument("provide exactly one of: a .real file or --qft N");
    if (qft_n > 0) return generate_qft(qft_n);
    auto text = read_file(real_path);
    if (!text) throw std::invalid_argument("cannot read " + real_path);
    std::string name = std::filesystem::path(real_path).stem().string();
    return decompose(parse_real(*text, name), stats);
  }
};

SolveMode parse_mode(const std::string& mode) {
  if (mode == "exact") return SolveMode::ExactDP;
  if (mode == "beam") return SolveMode::Beam;
  if (mode == "greedy") return SolveMode::Greedy;
  throw std::invalid_argument("unknown mode: " + mode);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_solve(const CircuitInput& input, const std::string& mode, int beam_width,
              std::optional<double> time_limit, int threads, const std::string& out_dir) {
  QuantumCircuit circuit = input.load();
  SolverConfig config;
  config.mode = parse_mode(mode);
  config.beam_width = beam_width;
  config.time_limit = time_limit;
  config.thread_count = threads;

  SolveResult result;
  try {
    result = solve(circuit, config);
  } catch (const SolveTimeout& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kExitTimeout;
  }

  VerifyReport verified = verify_schedule(circuit, result.schedule);
  if (!verified.feasible || verified.total_swaps != result.objective) {
    std::cerr << "internal error: solver result failed verification\n";
    return kExitVerify;
  }

  json out = {
      {"n", circuit.n},
      {"m", circuit.m()},
      {"mode", mode},
      {"objective", result.objective},
      {"proven_optimal", result.proven_optimal},
      {"elapsed", result.elapsed},
      {"states_expanded", result.states_expanded},
  };
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_text(dir / "result.json", out.dump(2) + "\n");
  write_text(dir / "schedule.txt", write_schedule(result.schedule));
  write_text(dir / "compliant.txt", emit_compliant(circuit, result.schedule, result.swaps));
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_export_lp(const CircuitInput& input, bool relax_x, bool relax_k,
                  const std::string& out_path) {
  QuantumCircuit circuit = input.load();
  IlpModel model = build_model(circuit, RelaxOptions{relax_x, relax_k});
  std::cerr << model.vars.size() << " variables, " << model.constraints.size()
            << " constraints\n";
  std::string lp = export_lp(model);
  if (out_path.empty() || out_path == "-")
    std::cout << lp;
  else
    write_text(out_path, lp);
  return kExitOk;
}

int cmd_verify(const CircuitInput& input, const std::string& schedule_path,
               const std::string& solution_path, std::optional<std::int64_t> budget) {
  QuantumCircuit circuit = input.load();
  if (schedule_path.empty() == solution_path.empty())
    throw std::invalid_argument("provide exactly one of: a schedule file or --solution");

  OrderSchedule schedule;
  if (!solution_path.empty()) {
    auto text = read_file(solution_path);
    if (!text) throw std::invalid_argument("cannot read " + solution_path);
    Assignment assignment = parse_solution(*text);
    IlpModel model = build_model(circuit);
    check_known_names(model, assignment);
    CheckResult check = check_assignment(model, assignment);
    if (!check.feasible) {
      std::cout << "assignment infeasible; violated constraints:\n";
      for (const std::string& name : check.violated) std::cout << "  " << name << '\n';
      return kExitVerify;
    }
    schedule = assignment_to_schedule(circuit, assignment);
  } else {
    auto text = read_file(schedule_path);
    if (!text) throw std::invalid_argument("cannot read " + schedule_path);
    schedule = read_schedule(*text, circuit.n);
  }

  VerifyReport report = verify_schedule(circuit, schedule, budget);
  json out = {
      {"feasible", report.feasible},
      {"total_swaps", report.total_swaps},
      {"within_budget", report.within_budget},
      {"per_transition_cost", report.per_transition_cost},
  };
  std::vector<bool> gate_ok(report.per_gate_ok.begin(), report.per_gate_ok.end());
  out["per_gate_ok"] = gate_ok;
  std::cout << out.dump(2) << '\n';
  return (report.feasible && report.within_budget) ? kExitOk : kExitVerify;
}

int cmd_bench(const std::string& suite, std::string fixtures_dir, const std::string& mode,
              int beam_width, int max_n, std::optional<double> time_limit, int threads,
              const std::string& json_path) {
  if (fixtures_dir.empty()) {
    if (const char* env = std::getenv("NNROUTE_FIXTURES")) fixtures_dir = env;
  }
  if (suite != "qft" && fixtures_dir.empty())
    throw std::invalid_argument("fixtures suite needs --fixtures DIR or NNROUTE_FIXTURES");

  BenchOptions options;
  options.suite = suite;
  options.fixtures_dir = fixtures_dir;
  options.max_n = max_n;
  options.solver.mode = parse_mode(mode);
  options.solver.beam_width = beam_width;
  options.solver.time_limit = time_limit;
  options.solver.thread_count = threads;

  BenchReport report = run_bench(options);
  std::cout << bench_markdown(report);

  if (!json_path.empty()) {
    json rows = json::array();
    for (const BenchResult& r : report.results)
      rows.push_back({{"name", r.row.name},
                      {"n", r.row.n},
                      {"m_expected", r.row.m_expected},
                      {"m_actual", r.m_actual},
                      {"swaps_expected", r.row.swaps_expected},
                      {"swaps_actual", r.swaps_actual},
                      {"status", bench_status_name(r.status)},
                      {"proven_optimal", r.proven_optimal},
                      {"gap", r.gap},
                      {"elapsed", r.elapsed}});
    json out = {{"mode", report.mode},
                {"matches", report.matches},
                {"swap_mismatches", report.swap_mismatches},
                {"decomposition_mismatches", report.decomposition_mismatches},
                {"missing", report.missing},
                {"timeouts", report.timeouts},
                {"mean_gap", report.mean_gap},
                {"rows", rows}};
    write_text(json_path, out.dump(2) + "\n");
  }
  return report.swap_mismatches == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qubit routing for linear nearest-neighbor architectures"};
  app.require_subcommand(1);

  // solve
  CircuitInput solve_input;
  std::string solve_mode = "exact", solve_out = ".";
  int solve_beam = 64, solve_threads = 1;
  double solve_limit = 0.0;
  CLI::App* solve_cmd = app.add_subcommand("solve", "route a circuit and write result files");
  solve_input.attach(solve_cmd);
  solve_cmd->add_option("--mode", solve_mode, "exact|beam|greedy")
      ->check(CLI::IsMember({"exact", "beam", "greedy"}));
  solve_cmd->add_option("--beam-width", solve_beam, "beam width")->check(CLI::PositiveNumber);
  CLI::Option* solve_limit_opt =
      solve_cmd->add_option("--time-limit", solve_limit, "time limit in seconds");
  solve_cmd->add_option("--threads", solve_threads, "solver threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", solve_out, "output directory");

  // export-lp
  CircuitInput lp_input;
  bool relax_x = false, relax_k = false;
  std::string lp_out;
  CLI::App* lp_cmd = app.add_subcommand("export-lp", "emit the ILP model in LP format");
  lp_input.attach(lp_cmd);
  lp_cmd->add_flag("--relax-x", relax_x, "relax location variables to continuous");
  lp_cmd->add_flag("--relax-k", relax_k, "relax linearization variables to continuous");
  lp_cmd->add_option("--out", lp_out, "output file (default stdout)");

  // verify
  CircuitInput verify_input;
  std::string verify_schedule_path, verify_solution_path;
  std::int64_t verify_budget = 0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a schedule or LP solution");
  verify_input.attach(verify_cmd);
  verify_cmd->add_option("--schedule", verify_schedule_path, "schedule file");
  verify_cmd->add_option("--solution", verify_solution_path, "LP solution file (name value)");
  CLI::Option* budget_opt =
      verify_cmd->add_option("--budget", verify_budget, "maximum allowed SWAP count");

  // bench
  std::string bench_suite = "all", bench_fixtures, bench_mode = "exact", bench_json;
  int bench_beam = 64, bench_max_n = 7, bench_threads = 1;
  double bench_limit = 0.0;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run the published benchmark table");
  bench_cmd->add_option("--suite", bench_suite, "qft|fixtures|all")
      ->check(CLI::IsMember({"qft", "fixtures", "all"}));
  bench_cmd->add_option("--fixtures", bench_fixtures,
                        ".real fixture directory (or NNROUTE_FIXTURES)");
  bench_cmd->add_option("--mode", bench_mode, "exact|beam|greedy")
      ->check(CLI::IsMember({"exact", "beam", "greedy"}));
  bench_cmd->add_option("--beam-width", bench_beam, "beam width")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--max-n", bench_max_n, "skip instances above this qubit count");
  CLI::Option* bench_limit_opt =
      bench_cmd->add_option("--time-limit", bench_limit, "per-instance time limit in seconds");
  bench_cmd->add_option("--threads", bench_threads, "solver threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--json", bench_json, "also write the report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed())
      return cmd_solve(solve_input, solve_mode, solve_beam,
                       solve_limit_opt->count() ? std::optional<double>(solve_limit)
                                                : std::nullopt,
                       solve_threads, solve_out);
    if (lp_cmd->parsed()) return cmd_export_lp(lp_input, relax_x, relax_k, lp_out);
    if (verify_cmd->parsed())
      return cmd_verify(verify_input, verify_schedule_path, verify_solution_path,
                        budget_opt->count() ? std::optional<std::int64_t>(verify_budget)
                                            : std::nullopt);
    if (bench_cmd->parsed())
      return cmd_bench(bench_suite, bench_fixtures, bench_mode, bench_beam, bench_max_n,
                       bench_limit_opt->count() ? std::optional<double>(bench_limit)
                                                : std::nullopt,
                       bench_threads, bench_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DecomposeError& e) {
    std::cerr << "decompose error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
