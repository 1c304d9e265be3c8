#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nnroute/circuit.hpp"
#include "nnroute/decompose.hpp"
#include "nnroute/real.hpp"
#include "nnroute/solver.hpp"

namespace nnroute {

enum class BenchSource { Qft, Fixture };

struct BenchRow {
  std::string name;
  int n = 0;
  int m_expected = 0;
  int swaps_expected = 0;
  BenchSource source = BenchSource::Fixture;
};

/// The full published benchmark table: name, qubit count, 2-qubit gate count
/// after decomposition, and optimal SWAP count.
inline const std::vector<BenchRow>& bench_table() {
  static const std::vector<BenchRow> rows = {
      {"QFT_QFT3", 3, 3, 1, BenchSource::Qft},
      {"peres_10", 3, 4, 1, BenchSource::Fixture},
      {"peres_8", 3, 4, 1, BenchSource::Fixture},
      {"toffoli_2", 3, 5, 1, BenchSource::Fixture},
      {"toffoli_1", 3, 5, 1, BenchSource::Fixture},
      {"peres_9", 3, 6, 1, BenchSource::Fixture},
      {"fredkin_7", 3, 7, 1, BenchSource::Fixture},
      {"ex-1_166", 3, 7, 2, BenchSource::Fixture},
      {"fredkin_5", 3, 7, 1, BenchSource::Fixture},
      {"ham3_103", 3, 8, 2, BenchSource::Fixture},
      {"miller_12", 3, 8, 2, BenchSource::Fixture},
      {"ham3_102", 3, 9, 1, BenchSource::Fixture},
      {"3_17_15", 3, 9, 2, BenchSource::Fixture},
      {"3_17_13", 3, 13, 3, BenchSource::Fixture},
      {"3_17_14", 3, 13, 3, BenchSource::Fixture},
      {"fredkin_6", 3, 15, 3, BenchSource::Fixture},
      {"miller_11", 3, 17, 4, BenchSource::Fixture},
      {"QFT_QFT4", 4, 6, 3, BenchSource::Qft},
      {"toffoli_double_3", 4, 7, 1, BenchSource::Fixture},
      {"rd32-v1_69", 4, 8, 2, BenchSource::Fixture},
      {"decod24-v1_42", 4, 8, 2, BenchSource::Fixture},
      {"rd32-v0_67", 4, 8, 2, BenchSource::Fixture},
      {"decod24-v2_44", 4, 8, 3, BenchSource::Fixture},
      {"decod24-v0_40", 4, 8, 3, BenchSource::Fixture},
      {"decod24-v3_46", 4, 9, 3, BenchSource::Fixture},
      {"toffoli_double_4", 4, 10, 2, BenchSource::Fixture},
      {"rd32-v1_68", 4, 12, 3, BenchSource::Fixture},
      {"rd32-v0_66", 4, 12, 0, BenchSource::Fixture},
      {"decod24-v0_39", 4, 15, 5, BenchSource::Fixture},
      {"decod24-v2_43", 4, 16, 5, BenchSource::Fixture},
      {"decod24-v0_38", 4, 17, 4, BenchSource::Fixture},
      {"decod24-v1_41", 4, 21, 7, BenchSource::Fixture},
      {"hwb4_52", 4, 23, 8, BenchSource::Fixture},
      {"aj-e11_168", 4, 29, 12, BenchSource::Fixture},
      {"4_49_17", 4, 30, 12, BenchSource::Fixture},
      {"decod24-v3_45", 4, 32, 13, BenchSource::Fixture},
      {"mod10_176", 4, 42, 15, BenchSource::Fixture},
      {"aj-e11_165", 4, 44, 18, BenchSource::Fixture},
      {"mod10_171", 4, 57, 24, BenchSource::Fixture},
      {"4_49_16", 4, 59, 22, BenchSource::Fixture},
      {"mini-alu_167", 4, 62, 27, BenchSource::Fixture},
      {"hwb4_50", 4, 63, 23, BenchSource::Fixture},
      {"hwb4_49", 4, 65, 23, BenchSource::Fixture},
      {"hwb4_51", 4, 75, 28, BenchSource::Fixture},
      {"4mod5-v1_25", 5, 7, 1, BenchSource::Fixture},
      {"4gt11_84", 5, 7, 1, BenchSource::Fixture},
      {"4gt11-v1_85", 5, 7, 1, BenchSource::Fixture},
      {"4mod5-v0_20", 5, 8, 2, BenchSource::Fixture},
      {"4mod5-v1_22", 5, 9, 1, BenchSource::Fixture},
      {"QFT_QFT5", 5, 10, 6, BenchSource::Qft},
      {"mod5d1_63", 5, 11, 2, BenchSource::Fixture},
      {"4mod5-v0_19", 5, 12, 3, BenchSource::Fixture},
      {"4gt11_83", 5, 12, 3, BenchSource::Fixture},
      {"4mod5-v1_24", 5, 12, 3, BenchSource::Fixture},
      {"mod5mils_65", 5, 12, 4, BenchSource::Fixture},
      {"mod5mils_71", 5, 12, 2, BenchSource::Fixture},
      {"alu-v2_33", 5, 13, 4, BenchSource::Fixture},
      {"alu-v1_29", 5, 13, 4, BenchSource::Fixture},
      {"alu-v0_27", 5, 13, 4, BenchSource::Fixture},
      {"mod5d2_70", 5, 14, 5, BenchSource::Fixture},
      {"alu-v3_35", 5, 14, 5, BenchSource::Fixture},
      {"alu-v4_37", 5, 14, 5, BenchSource::Fixture},
      {"alu-v1_28", 5, 14, 4, BenchSource::Fixture},
      {"4gt13-v1_93", 5, 15, 5, BenchSource::Fixture},
      {"4gt13_92", 5, 15, 6, BenchSource::Fixture},
      {"4gt11_82", 5, 16, 6, BenchSource::Fixture},
      {"4mod5-v0_21", 5, 17, 8, BenchSource::Fixture},
      {"rd32_272", 5, 18, 7, BenchSource::Fixture},
      {"alu-v3_34", 5, 18, 4, BenchSource::Fixture},
      {"mod5d2_64", 5, 19, 6, BenchSource::Fixture},
      {"alu-v0_26", 5, 21, 8, BenchSource::Fixture},
      {"4gt5_75", 5, 21, 6, BenchSource::Fixture},
      {"4mod5-v0_18", 5, 23, 8, BenchSource::Fixture},
      {"4mod5-v1_23", 5, 24, 9, BenchSource::Fixture},
      {"one-two-three-v2_100", 5, 24, 7, BenchSource::Fixture},
      {"one-two-three-v3_101", 5, 24, 7, BenchSource::Fixture},
      {"rd32_271", 5, 26, 11, BenchSource::Fixture},
      {"4gt5_77", 5, 28, 10, BenchSource::Fixture},
      {"4gt5_76", 5, 29, 10, BenchSource::Fixture},
      {"alu-v4_36", 5, 30, 9, BenchSource::Fixture},
      {"4gt13_91", 5, 30, 8, BenchSource::Fixture},
      {"4gt13_90", 5, 34, 12, BenchSource::Fixture},
      {"4gt10-v1_81", 5, 34, 13, BenchSource::Fixture},
      {"one-two-three-v1_99", 5, 36, 15, BenchSource::Fixture},
      {"4gt4-v0_80", 5, 36, 19, BenchSource::Fixture},
      {"4mod7-v0_94", 5, 38, 12, BenchSource::Fixture},
      {"alu-v2_32", 5, 38, 16, BenchSource::Fixture},
      {"4mod7-v0_95", 5, 38, 14, BenchSource::Fixture},
      {"4mod7-v1_96", 5, 38, 14, BenchSource::Fixture},
      {"one-two-three-v0_98", 5, 40, 15, BenchSource::Fixture},
      {"4gt12-v0_88", 5, 41, 20, BenchSource::Fixture},
      {"4gt12-v1_89", 5, 44, 22, BenchSource::Fixture},
      {"sf_275", 5, 46, 18, BenchSource::Fixture},
      {"4gt4-v0_79", 5, 49, 22, BenchSource::Fixture},
      {"4gt4-v0_78", 5, 53, 26, BenchSource::Fixture},
      {"4gt4-v0_72", 5, 53, 24, BenchSource::Fixture},
      {"4gt12-v0_87", 5, 54, 22, BenchSource::Fixture},
      {"4gt4-v1_74", 5, 57, 29, BenchSource::Fixture},
      {"4gt12-v0_86", 5, 58, 26, BenchSource::Fixture},
      {"mod8-10_178", 5, 68, 37, BenchSource::Fixture},
      {"one-two-three-v0_97", 5, 71, 32, BenchSource::Fixture},
      {"4gt4-v0_73", 5, 89, 40, BenchSource::Fixture},
      {"mod8-10_177", 5, 93, 48, BenchSource::Fixture},
      {"alu-v2_31", 5, 100, 49, BenchSource::Fixture},
      {"hwb5_55", 5, 101, 48, BenchSource::Fixture},
      {"rd32_273", 5, 104, 50, BenchSource::Fixture},
      {"alu-v2_30", 5, 112, 55, BenchSource::Fixture},
      {"graycode6_47", 6, 5, 0, BenchSource::Fixture},
      {"graycode6_48", 6, 5, 0, BenchSource::Fixture},
      {"QFT_QFT6", 6, 15, 11, BenchSource::Qft},
      {"decod24-enable_124", 6, 21, 5, BenchSource::Fixture},
      {"decod24-enable_125", 6, 21, 5, BenchSource::Fixture},
      {"decod24-bdd_294", 6, 24, 7, BenchSource::Fixture},
      {"mod5adder_129", 6, 71, 34, BenchSource::Fixture},
      {"mod5adder_128", 6, 77, 36, BenchSource::Fixture},
      {"decod24-enable_126", 6, 86, 37, BenchSource::Fixture},
      {"xor5_254", 7, 5, 3, BenchSource::Fixture},
      {"ex1_226", 7, 5, 3, BenchSource::Fixture},
      {"QFT_QFT7", 7, 21, 16, BenchSource::Qft},
      {"4mod5-bdd_287", 7, 23, 7, BenchSource::Fixture},
      {"alu-bdd_288", 7, 28, 8, BenchSource::Fixture},
      {"ham7_106", 7, 49, 28, BenchSource::Fixture},
      {"ham7_105", 7, 65, 34, BenchSource::Fixture},
      {"ham7_104", 7, 83, 42, BenchSource::Fixture},
      {"QFT_QFT8", 8, 28, 23, BenchSource::Qft},
      {"rd53_139", 8, 36, 11, BenchSource::Fixture},
      {"rd53_138", 8, 44, 11, BenchSource::Fixture},
      {"rd53_137", 8, 66, 35, BenchSource::Fixture},
      {"QFT_QFT9", 9, 36, 30, BenchSource::Qft},
      {"QFT_QFT10", 10, 45, 39, BenchSource::Qft},
      {"mini_alu_305", 10, 57, 23, BenchSource::Fixture},
      {"sys6-v0_144", 10, 62, 19, BenchSource::Fixture},
      {"rd73_141", 10, 64, 21, BenchSource::Fixture},
      {"parity_247", 18, 16, 14, BenchSource::Fixture},
  };
  return rows;
}

enum class BenchStatus { Match, SwapMismatch, DecompositionMismatch, Missing, Timeout };

struct BenchResult {
  BenchRow row;
  BenchStatus status = BenchStatus::Missing;
  int m_actual = -1;
  std::int64_t swaps_actual = -1;
  bool proven_optimal = false;
  double elapsed = 0.0;
  double gap = 0.0;  // heuristic modes: (actual - expected) / expected
};

struct BenchReport {
  std::vector<BenchResult> results;
  std::string mode;
  int matches = 0;
  int swap_mismatches = 0;
  int decomposition_mismatches = 0;
  int missing = 0;
  int timeouts = 0;
  double mean_gap = 0.0;  // over heuristic rows with expected > 0
};

struct BenchOptions {
  std::string suite = "all";  // qft | fixtures | all
  std::string fixtures_dir;
  SolverConfig solver;
  int max_n = 7;
  bool heuristic = false;  // gap reporting instead of exact matching
};

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline BenchReport run_bench(const BenchOptions& options) {
  BenchReport report;
  report.mode = options.solver.mode == SolveMode::ExactDP  ? "exact"
                : options.solver.mode == SolveMode::Beam   ? "beam"
                                                           : "greedy";
  const bool heuristic = options.solver.mode != SolveMode::ExactDP;
  double gap_sum = 0.0;
  int gap_count = 0;
  for (const BenchRow& row : bench_table()) {
    const bool is_qft = row.source == BenchSource::Qft;
    if (options.suite == "qft" && !is_qft) continue;
    if (options.suite == "fixtures" && is_qft) continue;
    if (row.n > options.max_n) continue;

    BenchResult result;
    result.row = row;
    QuantumCircuit circuit;
    if (is_qft) {
      circuit = generate_qft(row.n);
    } else {
      auto text = read_file(options.fixtures_dir + "/" + row.name + ".real");
      if (!text) {
        result.status = BenchStatus::Missing;
        report.results.push_back(result);
        ++report.missing;
        continue;
      }
      circuit = decompose(parse_real(*text, row.name));
    }
    result.m_actual = circuit.m();
    if (result.m_actual != row.m_expected) {
      // differing decomposition: reported, excluded from pass/fail
      result.status = BenchStatus::DecompositionMismatch;
      report.results.push_back(result);
      ++report.decomposition_mismatches;
      continue;
    }
    try {
      SolveResult solved = solve(circuit, options.solver);
      result.swaps_actual = solved.objective;
      result.proven_optimal = solved.proven_optimal;
      result.elapsed = solved.elapsed;
    } catch (const SolveTimeout&) {
      result.status = BenchStatus::Timeout;
      report.results.push_back(result);
      ++report.timeouts;
      continue;
    }
    if (heuristic) {
      result.status = BenchStatus::Match;
      if (row.swaps_expected > 0) {
        result.gap = static_cast<double>(result.swaps_actual - row.swaps_expected) /
                     row.swaps_expected;
        gap_sum += result.gap;
        ++gap_count;
      }
      ++report.matches;
    } else if (result.swaps_actual == row.swaps_expected) {
      result.status = BenchStatus::Match;
      ++report.matches;
    } else {
      result.status = BenchStatus::SwapMismatch;
      ++report.swap_mismatches;
    }
    report.results.push_back(result);
  }
  if (gap_count > 0) report.mean_gap = gap_sum / gap_count;
  return report;
}

inline const char* bench_status_name(BenchStatus status) {
  switch (status) {
    case BenchStatus::Match:
      return "match";
    case BenchStatus::SwapMismatch:
      return "swap-mismatch";
    case BenchStatus::DecompositionMismatch:
      return "decomposition-mismatch";
    case BenchStatus::Missing:
      return "missing";
    case BenchStatus::Timeout:
      return "timeout";
  }
  return "?";
}

inline std::string bench_markdown(const BenchReport& report) {
  std::ostringstream out;
  out << "| name | n | m | m expected | swaps | swaps expected | status | gap | time (s) |\n";
  out << "|------|---|---|------------|-------|----------------|--------|-----|----------|\n";
  for (const BenchResult& r : report.results) {
    out << "| " << r.row.name << " | " << r.row.n << " | "
        << (r.m_actual < 0 ? std::string("-") : std::to_string(r.m_actual)) << " | "
        << r.row.m_expected << " | "
        << (r.swaps_actual < 0 ? std::string("-") : std::to_string(r.swaps_actual)) << " | "
        << r.row.swaps_expected << " | " << bench_status_name(r.status) << " | ";
    std::ostringstream gap;
    gap.precision(3);
    gap << r.gap;
    out << gap.str() << " | ";
    std::ostringstream el;
    el.precision(3);
    el << std::fixed << r.elapsed;
    out << el.str() << " |\n";
  }
  out << "\nmode=" << report.mode << " matches=" << report.matches
      << " swap_mismatches=" << report.swap_mismatches
      << " decomposition_mismatches=" << report.decomposition_mismatches
      << " missing=" << report.missing << " timeouts=" << report.timeouts;
  if (report.mean_gap != 0.0) out << " mean_gap=" << report.mean_gap;
  out << '\n';
  return out.str();
}

}  // namespace nnroute
