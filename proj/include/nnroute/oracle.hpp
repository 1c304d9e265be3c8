#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "nnroute/circuit.hpp"

namespace nnroute {

/// Independent brute-force optimum for small instances. Deliberately shares
/// nothing with the layered solver: its own permutation enumeration over the
/// location -> qubit view, its own adjacency test, its own quadratic distance.
/// Guarded to n <= 5 and m <= 12. Returns the optimum only, no schedule.
inline std::int64_t brute_force_oracle(const QuantumCircuit& circuit) {
  circuit.validate();
  const int n = circuit.n;
  const int m = circuit.m();
  if (n > 5 || m > 12) throw std::invalid_argument("brute-force oracle limited to n<=5, m<=12");
  if (m == 0) return 0;

  // all n! arrangements, each a location -> qubit vector, built recursively
  std::vector<std::vector<int>> arrangements;
  std::vector<int> partial;
  std::vector<bool> used(n, false);
  struct Rec {
    int n;
    std::vector<std::vector<int>>& out;
    std::vector<int>& partial;
    std::vector<bool>& used;
    void build() {
      if (static_cast<int>(partial.size()) == n) {
        out.push_back(partial);
        return;
      }
      for (int q = 0; q < n; ++q) {
        if (used[q]) continue;
        used[q] = true;
        partial.push_back(q);
        build();
        partial.pop_back();
        used[q] = false;
      }
    }
  } rec{n, arrangements, partial, used};
  rec.build();

  auto location_of = [&](const std::vector<int>& arrangement, int qubit) {
    for (int loc = 0; loc < static_cast<int>(arrangement.size()); ++loc)
      if (arrangement[loc] == qubit) return loc;
    return -1;
  };
  auto adjacent = [&](const std::vector<int>& arrangement, const Gate& g) {
    int d = location_of(arrangement, g.a) - location_of(arrangement, g.b);
    return d == 1 || d == -1;
  };
  auto distance = [&](const std::vector<int>& u, const std::vector<int>& v) {
    std::int64_t count = 0;
    for (int q1 = 0; q1 < n; ++q1)
      for (int q2 = q1 + 1; q2 < n; ++q2) {
        bool before_u = location_of(u, q1) < location_of(u, q2);
        bool before_v = location_of(v, q1) < location_of(v, q2);
        if (before_u != before_v) ++count;
      }
    return count;
  };

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> cost(arrangements.size(), kInf);
  for (size_t s = 0; s < arrangements.size(); ++s)
    if (adjacent(arrangements[s], circuit.gates[0])) cost[s] = 0;
  for (int t = 1; t < m; ++t) {
    std::vector<std::int64_t> next(arrangements.size(), kInf);
    for (size_t s2 = 0; s2 < arrangements.size(); ++s2) {
      if (!adjacent(arrangements[s2], circuit.gates[t])) continue;
      for (size_t s1 = 0; s1 < arrangements.size(); ++s1) {
        if (cost[s1] >= kInf) continue;
        std::int64_t c = cost[s1] + distance(arrangements[s1], arrangements[s2]);
        if (c < next[s2]) next[s2] = c;
      }
    }
    cost.swap(next);
  }
  std::int64_t best = kInf;
  for (std::int64_t c : cost) best = std::min(best, c);
  if (best >= kInf) throw std::logic_error("no feasible schedule found");
  return best;
}

}  // namespace nnroute
