#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nnroute/circuit.hpp"
#include "nnroute/ilp.hpp"
#include "nnroute/schedule.hpp"

namespace nnroute {

/// Variable-name to value map, the carrier for external-solver solutions.
using Assignment = std::map<std::string, double>;

constexpr double kFeasibilityTolerance = 1e-6;

/// Solution-file import: `name value` per line, '#' comments.
inline Assignment parse_solution(const std::string& text) {
  Assignment a;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    double value;
    if (!(ls >> name)) continue;
    if (!(ls >> value))
      throw std::invalid_argument("solution line " + std::to_string(lineno) + ": missing value");
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("solution line " + std::to_string(lineno) + ": trailing tokens");
    a[name] = value;
  }
  return a;
}

/// Converts a feasible schedule into the canonical variable assignment:
/// x from locations, y from pairwise order, k from |y_t - y_{t+1}|.
inline Assignment schedule_to_assignment(const QuantumCircuit& circuit,
                                         const OrderSchedule& schedule) {
  VerifyReport report = verify_schedule(circuit, schedule);
  if (!report.feasible) throw std::invalid_argument("schedule is infeasible for this circuit");
  const int n = circuit.n;
  const int m = circuit.m();
  Assignment a;
  for (int t = 1; t <= m; ++t) {
    const QubitOrder& order = schedule.orders[t - 1];
    for (int i = 1; i <= n; ++i) a[x_name(i, t)] = order.pos[i - 1] + 1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        a[y_name(i, j, t)] = order.pos[i - 1] < order.pos[j - 1] ? 1.0 : 0.0;
  }
  for (int t = 1; t < m; ++t)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        a[k_name(i, j, t)] = std::abs(a[y_name(i, j, t)] - a[y_name(i, j, t + 1)]);
  return a;
}

/// Rounds the x values of an assignment back into a schedule. Each layer must
/// round to a permutation of {1..n}; anything else signals a corrupt or
/// infeasible solution file.
inline OrderSchedule assignment_to_schedule(const QuantumCircuit& circuit, const Assignment& a) {
  const int n = circuit.n;
  const int m = circuit.m();
  OrderSchedule schedule;
  for (int t = 1; t <= m; ++t) {
    std::vector<int> pos(n);
    for (int i = 1; i <= n; ++i) {
      auto it = a.find(x_name(i, t));
      if (it == a.end()) throw std::invalid_argument("missing variable " + x_name(i, t));
      pos[i - 1] = static_cast<int>(std::llround(it->second)) - 1;
    }
    QubitOrder order(std::move(pos));
    if (!order.is_permutation())
      throw std::invalid_argument("layer " + std::to_string(t) +
                                  ": rounded locations do not form a permutation");
    schedule.orders.push_back(std::move(order));
  }
  return schedule;
}

struct CheckResult {
  bool feasible = false;
  double objective = 0.0;
  std::vector<std::string> violated;
};

/// Evaluates every model constraint and bound at tolerance 1e-6.
inline CheckResult check_assignment(const IlpModel& model, const Assignment& a,
                                    double tol = kFeasibilityTolerance) {
  CheckResult result;
  std::vector<double> values(model.vars.size());
  for (size_t idx = 0; idx < model.vars.size(); ++idx) {
    const IlpVar& v = model.vars[idx];
    auto it = a.find(v.name);
    if (it == a.end()) throw std::invalid_argument("missing variable " + v.name);
    values[idx] = it->second;
    if (it->second < v.lower - tol || it->second > v.upper + tol)
      result.violated.push_back("bound:" + v.name);
  }
  for (const IlpConstraint& c : model.constraints) {
    double lhs = 0.0;
    for (const LinTerm& term : c.terms) lhs += term.coef * values[term.var];
    bool ok = c.sense == 'L'   ? lhs <= c.rhs + tol
              : c.sense == 'G' ? lhs >= c.rhs - tol
                               : std::abs(lhs - c.rhs) <= tol;
    if (!ok) result.violated.push_back(c.name);
  }
  for (const LinTerm& term : model.objective) result.objective += term.coef * values[term.var];
  result.feasible = result.violated.empty();
  return result;
}

/// Rejects assignments that name variables outside the model.
inline void check_known_names(const IlpModel& model, const Assignment& a) {
  for (const auto& [name, value] : a)
    if (!model.has_var(name)) throw std::invalid_argument("unknown variable '" + name + "'");
}

}  // namespace nnroute
