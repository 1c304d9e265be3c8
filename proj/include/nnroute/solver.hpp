#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nnroute/circuit.hpp"
#include "nnroute/order.hpp"
#include "nnroute/schedule.hpp"

namespace nnroute {

/// All qubit orders in which a gate's qubits sit on adjacent locations:
/// 2 * (n-1)! of them, enumerated in lexicographic order of the pos vector.
struct LayerStates {
  Gate gate;
  std::vector<QubitOrder> orders;
};

enum class SolveMode { ExactDP, Beam, Greedy };

struct SolverConfig {
  SolveMode mode = SolveMode::ExactDP;
  int beam_width = 64;
  std::optional<double> time_limit;           // seconds
  std::optional<std::int64_t> incumbent_seed; // known upper bound
  int thread_count = 1;
  bool half_symmetry = false;  // restrict the first layer modulo array reversal
};

struct SolveResult {
  std::int64_t objective = 0;
  OrderSchedule schedule;
  std::vector<std::vector<SwapStep>> swaps;  // one list per transition
  bool proven_optimal = false;
  double elapsed = 0.0;
  std::int64_t states_expanded = 0;
};

class SolveTimeout : public std::runtime_error {
 public:
  explicit SolveTimeout(const std::string& what) : std::runtime_error(what) {}
};

inline LayerStates enumerate_feasible_orders(int n, const Gate& g) {
  if (n < 2) throw std::invalid_argument("need at least 2 qubits");
  if (g.a < 0 || g.b < 0 || g.a >= n || g.b >= n || g.a == g.b)
    throw std::invalid_argument("invalid gate");
  if (n > 10) throw std::invalid_argument("feasible-order enumeration capped at n=10");
  LayerStates layer;
  layer.gate = g;
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  do {
    if (std::abs(pos[g.a] - pos[g.b]) == 1) layer.orders.emplace_back(pos);
  } while (std::next_permutation(pos.begin(), pos.end()));
  return layer;
}

namespace detail {

inline int kendall_flat(const int* a, const int* b, int n) {
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) count += (a[i] < a[j]) != (b[i] < b[j]);
  return count;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Shared layered-search scaffolding: one state table per distinct gate, plus
// flattened pos vectors for the inner distance loop.
struct Layers {
  int n = 0;
  std::vector<const LayerStates*> per_gate;  // one per gate, shared for repeats
  std::map<std::pair<int, int>, LayerStates> cache;

  explicit Layers(const QuantumCircuit& circuit) : n(circuit.n) {
    for (const Gate& g : circuit.gates) {
      auto key = std::make_pair(g.lo(), g.hi());
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, enumerate_feasible_orders(circuit.n, g)).first;
      per_gate.push_back(&it->second);
    }
  }

  const int* flat(const LayerStates& layer, int state) const {
    return layer.orders[state].pos.data();
  }
};

inline void run_chunked(int total, int threads, const std::function<void(int, int)>& body) {
  if (threads <= 1 || total < 256) {
    body(0, total);
    return;
  }
  std::vector<std::thread> pool;
  int chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int lo = t * chunk;
    int hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Greedy baseline: keep one running order; before each gate, walk the two
/// qubits toward each other with adjacent swaps until they meet. The order
/// before the first gate is free, so its adjustment costs nothing.
inline SolveResult solve_greedy(const QuantumCircuit& circuit) {
  circuit.validate();
  if (circuit.n < 2) throw std::invalid_argument("need at least 2 qubits");
  detail::Stopwatch watch;
  SolveResult result;
  if (circuit.m() == 0) {
    result.proven_optimal = true;
    result.elapsed = watch.seconds();
    return result;
  }
  QubitOrder current = QubitOrder::identity(circuit.n);
  for (int t = 0; t < circuit.m(); ++t) {
    const Gate& g = circuit.gates[t];
    std::vector<SwapStep> steps;
    int la = current.pos[g.a], lb = current.pos[g.b];
    int left = std::min(la, lb), right = std::max(la, lb);
    const int d = right - left;
    if (d > 1) {
      const int from_left = (d - 1 + 1) / 2;   // left qubit moves ceil((d-1)/2) right
      const int from_right = (d - 1) / 2;      // right qubit moves floor((d-1)/2) left
      for (int s = 0; s < from_left; ++s) {
        steps.push_back(SwapStep{left + s});
        current = apply_swap(current, steps.back());
      }
      for (int s = 0; s < from_right; ++s) {
        steps.push_back(SwapStep{right - 1 - s});
        current = apply_swap(current, steps.back());
      }
    }
    if (t == 0) {
      // free initial placement
    } else {
      result.objective += static_cast<std::int64_t>(steps.size());
      result.swaps.push_back(std::move(steps));
    }
    result.schedule.orders.push_back(current);
    ++result.states_expanded;
  }
  result.proven_optimal = verify_schedule(circuit, result.schedule).total_swaps == 0;
  result.elapsed = watch.seconds();
  return result;
}

/// Beam search over the layered graph: keep the beam_width cheapest states per
/// layer, ties broken lexicographically on the pos vector. With a saturated
/// width this is the full DP and therefore exact.
inline SolveResult solve_beam(const QuantumCircuit& circuit, const SolverConfig& config) {
  circuit.validate();
  if (circuit.n < 2) throw std::invalid_argument("need at least 2 qubits");
  if (config.beam_width < 1) throw std::invalid_argument("beam width must be positive");
  detail::Stopwatch watch;
  SolveResult result;
  if (circuit.m() == 0) {
    result.proven_optimal = true;
    result.elapsed = watch.seconds();
    return result;
  }
  const detail::Layers layers(circuit);
  const int m = circuit.m();
  const int n = circuit.n;

  struct Entry {
    int state = 0;   // index into the layer's orders
    int parent = 0;  // index into the previous layer's kept entries
    int cost = 0;
  };
  std::vector<std::vector<Entry>> kept(m);

  // layer 0: every state at cost 0, truncated to the beam width
  {
    const auto& layer = *layers.per_gate[0];
    const int take = std::min<int>(config.beam_width, static_cast<int>(layer.orders.size()));
    for (int s = 0; s < take; ++s) kept[0].push_back({s, -1, 0});
  }
  bool saturated = static_cast<size_t>(config.beam_width) >= layers.per_gate[0]->orders.size();

  for (int t = 1; t < m; ++t) {
    if (config.time_limit && watch.seconds() > *config.time_limit)
      throw SolveTimeout("beam search exceeded the time limit");
    const auto& prev_layer = *layers.per_gate[t - 1];
    const auto& layer = *layers.per_gate[t];
    if (circuit.gates[t] == circuit.gates[t - 1]) {
      // identical gate: identity transition at zero cost
      kept[t].resize(kept[t - 1].size());
      for (size_t e = 0; e < kept[t - 1].size(); ++e)
        kept[t][e] = {kept[t - 1][e].state, static_cast<int>(e), kept[t - 1][e].cost};
      continue;
    }
    const int num_states = static_cast<int>(layer.orders.size());
    saturated = saturated && config.beam_width >= num_states;
    std::vector<Entry> candidates(num_states);
    const auto& frontier = kept[t - 1];
    detail::run_chunked(num_states, config.thread_count, [&](int lo, int hi) {
      for (int s2 = lo; s2 < hi; ++s2) {
        const int* b = layers.flat(layer, s2);
        int best = std::numeric_limits<int>::max();
        int best_parent = -1;
        for (size_t e = 0; e < frontier.size(); ++e) {
          if (frontier[e].cost >= best) continue;
          int cost = frontier[e].cost +
                     detail::kendall_flat(layers.flat(prev_layer, frontier[e].state), b, n);
          if (cost < best) {
            best = cost;
            best_parent = static_cast<int>(e);
          }
        }
        candidates[s2] = {s2, best_parent, best};
      }
    });
    result.states_expanded += num_states;
    std::sort(candidates.begin(), candidates.end(), [](const Entry& a, const Entry& b) {
      return a.cost != b.cost ? a.cost < b.cost : a.state < b.state;
    });
    const int take = std::min(config.beam_width, num_states);
    kept[t].assign(candidates.begin(), candidates.begin() + take);
  }

  // pick the cheapest final entry and walk the parents back
  int best_entry = 0;
  for (size_t e = 1; e < kept[m - 1].size(); ++e)
    if (kept[m - 1][e].cost < kept[m - 1][best_entry].cost) best_entry = static_cast<int>(e);
  result.objective = kept[m - 1][best_entry].cost;
  std::vector<int> states(m);
  for (int t = m - 1, e = best_entry; t >= 0; --t) {
    states[t] = kept[t][e].state;
    e = kept[t][e].parent;
  }
  for (int t = 0; t < m; ++t) result.schedule.orders.push_back(layers.per_gate[t]->orders[states[t]]);
  for (int t = 1; t < m; ++t)
    result.swaps.push_back(realize_swaps(result.schedule.orders[t - 1], result.schedule.orders[t]));
  result.proven_optimal = saturated;
  result.elapsed = watch.seconds();
  return result;
}

/// Exact solver: forward dynamic programming over the layers of feasible
/// orders, with incumbent pruning seeded by a beam pre-run. Sorting each
/// frontier by cost lets the inner minimization stop early.
inline SolveResult solve_exact_dp(const QuantumCircuit& circuit, const SolverConfig& config = {}) {
  circuit.validate();
  if (circuit.n < 2) throw std::invalid_argument("need at least 2 qubits");
  detail::Stopwatch watch;
  SolveResult result;
  if (circuit.m() == 0) {
    result.proven_optimal = true;
    result.elapsed = watch.seconds();
    return result;
  }

  // incumbent from a beam pre-run (plus any caller-provided bound)
  SolverConfig beam_config = config;
  beam_config.beam_width = std::max(config.beam_width, 64);
  std::optional<SolveResult> incumbent;
  std::int64_t bound = config.incumbent_seed.value_or(std::numeric_limits<std::int64_t>::max());
  try {
    incumbent = solve_beam(circuit, beam_config);
    bound = std::min(bound, incumbent->objective);
  } catch (const SolveTimeout&) {
    throw SolveTimeout("time limit exhausted before any incumbent was found");
  }

  const detail::Layers layers(circuit);
  const int m = circuit.m();
  const int n = circuit.n;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;

  std::vector<std::vector<int>> dp(m), parent(m);
  dp[0].assign(layers.per_gate[0]->orders.size(), 0);
  parent[0].assign(dp[0].size(), -1);
  if (config.half_symmetry) {
    // keep only first-layer states lexicographically no greater than their
    // array-reversed image; the optimum is invariant under reversal
    const auto& layer = *layers.per_gate[0];
    for (size_t s = 0; s < layer.orders.size(); ++s) {
      std::vector<int> reversed(n);
      for (int q = 0; q < n; ++q) reversed[q] = n - 1 - layer.orders[s].pos[q];
      if (layer.orders[s].pos > reversed) dp[0][s] = kInf;
    }
  }

  bool timed_out = false;
  for (int t = 1; t < m && !timed_out; ++t) {
    const auto& prev_layer = *layers.per_gate[t - 1];
    const auto& layer = *layers.per_gate[t];
    if (circuit.gates[t] == circuit.gates[t - 1]) {
      dp[t] = dp[t - 1];
      parent[t].resize(dp[t].size());
      std::iota(parent[t].begin(), parent[t].end(), 0);
      continue;
    }
    if (config.time_limit && watch.seconds() > *config.time_limit) {
      timed_out = true;
      break;
    }
    // frontier sorted by (cost, state index): the inner loop can stop as soon
    // as the residual frontier cost alone reaches the best found so far
    std::vector<int> order_idx;
    order_idx.reserve(dp[t - 1].size());
    for (size_t s = 0; s < dp[t - 1].size(); ++s)
      if (dp[t - 1][s] < bound && dp[t - 1][s] < kInf) order_idx.push_back(static_cast<int>(s));
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
      return dp[t - 1][a] != dp[t - 1][b] ? dp[t - 1][a] < dp[t - 1][b] : a < b;
    });
    result.states_expanded += static_cast<std::int64_t>(order_idx.size());

    const int num_states = static_cast<int>(layer.orders.size());
    dp[t].assign(num_states, kInf);
    parent[t].assign(num_states, -1);
    detail::run_chunked(num_states, config.thread_count, [&](int lo, int hi) {
      for (int s2 = lo; s2 < hi; ++s2) {
        const int* b = layers.flat(layer, s2);
        int best = kInf;
        int best_parent = -1;
        for (int s1 : order_idx) {
          const int base = dp[t - 1][s1];
          if (base >= best) break;
          int cost = base + detail::kendall_flat(layers.flat(prev_layer, s1), b, n);
          if (cost < best) {
            best = cost;
            best_parent = s1;
          }
        }
        dp[t][s2] = best;
        parent[t][s2] = best_parent;
      }
    });
  }

  if (timed_out) {
    result = *incumbent;
    result.proven_optimal = false;
    result.elapsed = watch.seconds();
    return result;
  }

  int best_state = -1;
  int best_cost = kInf;
  for (size_t s = 0; s < dp[m - 1].size(); ++s)
    if (dp[m - 1][s] < best_cost) {
      best_cost = static_cast<int>(dp[m - 1][s]);
      best_state = static_cast<int>(s);
    }

  if (incumbent && incumbent->objective <= best_cost) {
    // the beam already achieved the optimum; reuse its certificate
    result.swaps = incumbent->swaps;
    result.schedule = incumbent->schedule;
    result.objective = incumbent->objective;
  } else {
    result.objective = best_cost;
    std::vector<int> states(m);
    for (int t = m - 1, s = best_state; t >= 0; --t) {
      states[t] = s;
      s = parent[t][s];
    }
    for (int t = 0; t < m; ++t)
      result.schedule.orders.push_back(layers.per_gate[t]->orders[states[t]]);
    for (int t = 1; t < m; ++t)
      result.swaps.push_back(realize_swaps(result.schedule.orders[t - 1], result.schedule.orders[t]));
  }
  result.proven_optimal = true;
  result.elapsed = watch.seconds();
  return result;
}

inline SolveResult solve(const QuantumCircuit& circuit, const SolverConfig& config) {
  switch (config.mode) {
    case SolveMode::ExactDP:
      return solve_exact_dp(circuit, config);
    case SolveMode::Beam:
      return solve_beam(circuit, config);
    case SolveMode::Greedy:
      return solve_greedy(circuit);
  }
  throw std::invalid_argument("unknown solve mode");
}

}  // namespace nnroute
