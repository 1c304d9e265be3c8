#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nnroute/circuit.hpp"
#include "nnroute/order.hpp"

namespace nnroute {

/// One qubit order per gate: the decision object of the compliance problem.
struct OrderSchedule {
  std::vector<QubitOrder> orders;

  int length() const { return static_cast<int>(orders.size()); }
};

struct VerifyReport {
  bool feasible = false;
  std::int64_t total_swaps = 0;
  std::vector<bool> per_gate_ok;
  std::vector<std::int64_t> per_transition_cost;
  bool within_budget = true;
};

/// Checks a schedule against a circuit: every gate's qubits adjacent in its
/// order, SWAP cost summed over consecutive transitions. The final order is
/// unconstrained; there is no requirement to return to the starting order.
inline VerifyReport verify_schedule(const QuantumCircuit& circuit, const OrderSchedule& schedule,
                                    std::optional<std::int64_t> budget = std::nullopt) {
  if (schedule.length() != circuit.m())
    throw std::invalid_argument("schedule length does not match gate count");
  VerifyReport report;
  bool all_ok = true;
  for (int t = 0; t < circuit.m(); ++t) {
    const QubitOrder& order = schedule.orders[t];
    if (order.n() != circuit.n) throw std::invalid_argument("order size does not match circuit");
    if (!order.is_permutation()) throw std::invalid_argument("order is not a permutation");
    const Gate& g = circuit.gates[t];
    bool ok = std::abs(order.pos[g.a] - order.pos[g.b]) == 1;
    report.per_gate_ok.push_back(ok);
    all_ok = all_ok && ok;
  }
  for (int t = 0; t + 1 < circuit.m(); ++t) {
    std::int64_t cost = kendall_tau(schedule.orders[t], schedule.orders[t + 1]);
    report.per_transition_cost.push_back(cost);
    report.total_swaps += cost;
  }
  report.within_budget = !budget || report.total_swaps <= *budget;
  report.feasible = all_ok && report.within_budget;
  return report;
}

/// Schedule text format: one line per gate, n space-separated integers giving
/// the 1-based location of qubits 1..n. '#' starts a comment.
inline std::string write_schedule(const OrderSchedule& schedule) {
  std::ostringstream out;
  for (const QubitOrder& order : schedule.orders) {
    for (int q = 0; q < order.n(); ++q) {
      if (q) out << ' ';
      out << order.pos[q] + 1;
    }
    out << '\n';
  }
  return out.str();
}

inline OrderSchedule read_schedule(const std::string& text, int n) {
  OrderSchedule schedule;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> pos;
    int v;
    while (ls >> v) pos.push_back(v - 1);
    if (pos.empty()) continue;
    if (static_cast<int>(pos.size()) != n)
      throw std::invalid_argument("schedule line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(n) + " locations");
    QubitOrder order(std::move(pos));
    if (!order.is_permutation())
      throw std::invalid_argument("schedule line " + std::to_string(lineno) +
                                  ": not a permutation of 1.." + std::to_string(n));
    schedule.orders.push_back(std::move(order));
  }
  return schedule;
}

}  // namespace nnroute
