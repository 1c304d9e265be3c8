#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "nnroute/circuit.hpp"
#include "nnroute/order.hpp"
#include "nnroute/schedule.hpp"

namespace nnroute {

/// Materializes a solved circuit as a line-oriented listing. Before gate t the
/// adjacent-transposition SWAPs converting the previous order into the gate's
/// order are listed as 1-based location pairs; each gate is printed with the
/// two (adjacent) physical locations it acts on. The header records the qubit
/// count, gate count, SWAP count and the CNOT overhead of three CNOTs per
/// SWAP.
inline std::string emit_compliant(const QuantumCircuit& circuit, const OrderSchedule& schedule,
                                  const std::vector<std::vector<SwapStep>>& swaps) {
  VerifyReport report = verify_schedule(circuit, schedule);
  if (!report.feasible) throw std::invalid_argument("schedule is not feasible for this circuit");
  const int m = circuit.m();
  if (static_cast<int>(swaps.size()) != (m > 0 ? m - 1 : 0))
    throw std::invalid_argument("expected one swap list per transition");

  std::int64_t total_swaps = 0;
  for (const auto& steps : swaps) total_swaps += static_cast<std::int64_t>(steps.size());
  if (total_swaps != report.total_swaps)
    throw std::invalid_argument("swap lists do not realize the schedule cost");

  std::ostringstream out;
  out << "n=" << circuit.n << '\n';
  out << "m=" << m << '\n';
  out << "swaps=" << total_swaps << '\n';
  out << "cnot_overhead=" << 3 * total_swaps << '\n';
  for (int t = 0; t < m; ++t) {
    if (t > 0) {
      // Replay the transition to confirm the steps actually connect the
      // consecutive orders.
      QubitOrder cur = schedule.orders[t - 1];
      for (SwapStep step : swaps[t - 1]) {
        out << "swap " << step.location + 1 << ' ' << step.location + 2 << '\n';
        cur = apply_swap(cur, step);
      }
      if (cur != schedule.orders[t])
        throw std::invalid_argument("swap steps for transition " + std::to_string(t) +
                                    " do not reach the next order");
    }
    const Gate& g = circuit.gates[t];
    const QubitOrder& order = schedule.orders[t];
    out << "gate " << t + 1 << ' ' << order.pos[g.a] + 1 << ' ' << order.pos[g.b] + 1 << ' '
        << (g.label.empty() ? "G" : g.label) << '\n';
  }
  return out.str();
}

struct CompliantListing {
  int n = 0;
  int m = 0;
  std::int64_t swaps = 0;
  std::int64_t cnot_overhead = 0;
  // Either a swap at (location, location+1) or a gate at two locations.
  struct Line {
    bool is_swap = false;
    int loc_a = 0;
    int loc_b = 0;
    int gate_index = 0;  // 1-based, gates only
    std::string label;
  };
  std::vector<Line> lines;
};

/// Reads back an emit_compliant listing; used for self-consistency checks.
inline CompliantListing parse_compliant(const std::string& text) {
  CompliantListing listing;
  std::istringstream in(text);
  std::string line;
  std::int64_t swap_lines = 0;
  int gate_lines = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("n=", 0) == 0) {
      listing.n = std::stoi(line.substr(2));
    } else if (line.rfind("m=", 0) == 0) {
      listing.m = std::stoi(line.substr(2));
    } else if (line.rfind("swaps=", 0) == 0) {
      listing.swaps = std::stoll(line.substr(6));
    } else if (line.rfind("cnot_overhead=", 0) == 0) {
      listing.cnot_overhead = std::stoll(line.substr(14));
    } else {
      std::istringstream ls(line);
      std::string word;
      ls >> word;
      CompliantListing::Line entry;
      if (word == "swap") {
        entry.is_swap = true;
        if (!(ls >> entry.loc_a >> entry.loc_b) || entry.loc_b != entry.loc_a + 1)
          throw std::invalid_argument("malformed swap line: " + line);
        ++swap_lines;
      } else if (word == "gate") {
        if (!(ls >> entry.gate_index >> entry.loc_a >> entry.loc_b >> entry.label))
          throw std::invalid_argument("malformed gate line: " + line);
        if (std::abs(entry.loc_a - entry.loc_b) != 1)
          throw std::invalid_argument("gate on non-adjacent locations: " + line);
        ++gate_lines;
      } else {
        throw std::invalid_argument("unrecognized line: " + line);
      }
      listing.lines.push_back(entry);
    }
  }
  if (gate_lines != listing.m) throw std::invalid_argument("gate line count disagrees with header");
  if (swap_lines != listing.swaps) throw std::invalid_argument("swap line count disagrees with header");
  if (listing.cnot_overhead != 3 * listing.swaps)
    throw std::invalid_argument("cnot_overhead disagrees with swap count");
  return listing;
}

}  // namespace nnroute
