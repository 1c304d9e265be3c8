// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fixture_util.hpp"
#include "nnroute/assignment.hpp"
#include "nnroute/decompose.hpp"
#include "nnroute/ilp.hpp"
#include "nnroute/oracle.hpp"
#include "nnroute/order.hpp"
#include "nnroute/solver.hpp"

using namespace nnroute;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : " — ",
              detail.c_str());
  if (!ok) ++failures;
}

QuantumCircuit random_circuit(int n, int m, std::mt19937& rng) {
  QuantumCircuit circuit;
  circuit.n = n;
  for (int t = 0; t < m; ++t) {
    int a = static_cast<int>(rng() % n);
    int b = static_cast<int>(rng() % (n - 1));
    if (b >= a) ++b;
    circuit.gates.emplace_back(a, b);
  }
  return circuit;
}

QubitOrder random_order(int n, std::mt19937& rng) {
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  return QubitOrder(std::move(pos));
}

bool certificate_ok(const QuantumCircuit& circuit, const SolveResult& result) {
  VerifyReport r = verify_schedule(circuit, result.schedule);
  return r.feasible && r.total_swaps == result.objective;
}

// Criterion 1: exact optima for QFT3..QFT7.
void criterion_qft() {
  const std::vector<std::pair<int, std::int64_t>> expected = {
      {3, 1}, {4, 3}, {5, 6}, {6, 11}, {7, 16}};
  bool ok = true;
  std::string detail;
  SolverConfig config;
  config.thread_count = 4;
  for (auto [n, optimum] : expected) {
    SolveResult result = solve_exact_dp(generate_qft(n), config);
    bool here = result.objective == optimum && result.proven_optimal &&
                certificate_ok(generate_qft(n), result);
    if (!here) ok = false;
    detail += "QFT" + std::to_string(n) + "=" + std::to_string(result.objective) +
              (here ? "" : "(!)") + " ";
  }
  report("criterion 1: QFT3..QFT7 exact optima 1,3,6,11,16 with certificates", ok, detail);
}

// Criterion 2: bundled fixture circuits reproduce published gate counts and optima.
void criterion_fixtures() {
  struct Expect {
    const char* name;
    int m;
    std::int64_t swaps;
  };
  const std::vector<Expect> table = {
      {"peres_8", 4, 1},        {"toffoli_1", 5, 1},  {"fredkin_5", 7, 1},
      {"graycode6_47", 5, 0},   {"xor5_254", 5, 3},   {"ex-1_166", 7, 2},
      {"ham3_103", 8, 2},       {"3_17_13", 13, 3},   {"rd32-v0_67", 8, 2},
      {"decod24-v1_41", 21, 7}, {"hwb4_52", 23, 8},
  };
  bool ok = true;
  std::string detail;
  for (const Expect& e : table) {
    try {
      QuantumCircuit circuit = fixture_circuit(e.name);
      SolveResult result = solve_exact_dp(circuit);
      bool here = circuit.m() == e.m && result.objective == e.swaps &&
                  certificate_ok(circuit, result);
      if (!here) {
        ok = false;
        detail += std::string(e.name) + ": m=" + std::to_string(circuit.m()) +
                  " swaps=" + std::to_string(result.objective) + " ";
      }
    } catch (const std::exception& ex) {
      ok = false;
      detail += std::string(e.name) + ": " + ex.what() + " ";
    }
  }
  report("criterion 2: 11 fixture circuits match published m and optimal swaps", ok, detail);
}

// Criterion 3: exact solver agrees with the independent brute-force oracle.
void criterion_oracle() {
  std::mt19937 rng(20260824);
  bool ok = true;
  std::string detail;
  int checked = 0;
  auto run = [&](int count, int max_n, int max_m) {
    for (int iter = 0; iter < count && ok; ++iter) {
      int n = 2 + static_cast<int>(rng() % (max_n - 1));
      int m = 1 + static_cast<int>(rng() % max_m);
      QuantumCircuit circuit = random_circuit(n, m, rng);
      SolveResult exact = solve_exact_dp(circuit);
      if (exact.objective != brute_force_oracle(circuit) || !certificate_ok(circuit, exact)) {
        ok = false;
        detail = "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
      ++checked;
    }
  };
  run(200, 4, 8);
  for (int iter = 0; iter < 50 && ok; ++iter) {
    QuantumCircuit circuit = random_circuit(5, 1 + static_cast<int>(rng() % 10), rng);
    SolveResult exact = solve_exact_dp(circuit);
    if (exact.objective != brute_force_oracle(circuit)) {
      ok = false;
      detail = "mismatch at n=5";
    }
    ++checked;
  }
  report("criterion 3: exact DP equals brute-force oracle on 250 random instances", ok,
         ok ? std::to_string(checked) + " instances" : detail);
}

// Criterion 4: distance metric and swap realization.
void criterion_metric() {
  std::mt19937 rng(17);
  bool ok = true;
  std::string detail;

  for (int iter = 0; iter < 10000 && ok; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);
    QubitOrder a = random_order(n, rng), b = random_order(n, rng), c = random_order(n, rng);
    std::int64_t dab = kendall_tau(a, b);
    if (dab != kendall_tau_naive(a, b) || dab != kendall_tau(b, a) || ((dab == 0) != (a == b)) ||
        dab > max_kendall_tau(n) || kendall_tau(a, c) > dab + kendall_tau(b, c)) {
      ok = false;
      detail = "metric axiom failed at n=" + std::to_string(n);
    }
  }

  // exhaustive agreement naive vs merge-sort for n <= 5
  for (int n = 2; n <= 5 && ok; ++n) {
    std::vector<int> pa(n), pb(n);
    std::iota(pa.begin(), pa.end(), 0);
    do {
      std::iota(pb.begin(), pb.end(), 0);
      do {
        QubitOrder a{pa}, b{pb};
        if (kendall_tau(a, b) != kendall_tau_naive(a, b)) {
          ok = false;
          detail = "naive/merge disagreement at n=" + std::to_string(n);
        }
      } while (ok && std::next_permutation(pb.begin(), pb.end()));
    } while (ok && std::next_permutation(pa.begin(), pa.end()));
  }

  // n = 8 pairs plus realize_swaps replay
  for (int iter = 0; iter < 10000 && ok; ++iter) {
    QubitOrder a = random_order(8, rng), b = random_order(8, rng);
    std::int64_t d = kendall_tau(a, b);
    if (d != kendall_tau_naive(a, b)) {
      ok = false;
      detail = "n=8 disagreement";
      break;
    }
    auto plan = realize_swaps(a, b);
    if (static_cast<std::int64_t>(plan.size()) != d) {
      ok = false;
      detail = "realize_swaps length != distance";
      break;
    }
    QubitOrder cur = a;
    for (SwapStep step : plan) cur = apply_swap(cur, step);
    if (!(cur == b)) {
      ok = false;
      detail = "realize_swaps replay mismatch";
    }
  }
  report("criterion 4: Kendall tau metric suite and swap realization (30k+ checks)", ok, detail);
}

// Criterion 5: ILP model sizes and schedule<->assignment round trips.
void criterion_ilp() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 8 && ok; ++n)
    for (int m = 1; m <= 20 && ok; ++m) {
      QuantumCircuit circuit;
      circuit.n = n;
      for (int t = 0; t < m; ++t) circuit.gates.emplace_back(0, 1);
      IlpModel model = build_model(circuit);
      if (static_cast<std::int64_t>(model.vars.size()) != IlpModel::expected_var_count(n, m) ||
          static_cast<std::int64_t>(model.constraints.size()) !=
              IlpModel::expected_constraint_count(n, m)) {
        ok = false;
        detail = "size formula failed at n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    }

  std::mt19937 rng(5150);
  for (int iter = 0; iter < 500 && ok; ++iter) {
    int n = 2 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 8);
    QuantumCircuit circuit = random_circuit(n, m, rng);
    OrderSchedule schedule;
    for (const Gate& g : circuit.gates) {
      LayerStates layer = enumerate_feasible_orders(n, g);
      schedule.orders.push_back(layer.orders[rng() % layer.orders.size()]);
    }
    VerifyReport verified = verify_schedule(circuit, schedule);
    IlpModel model = build_model(circuit);
    Assignment a = schedule_to_assignment(circuit, schedule);
    CheckResult check = check_assignment(model, a);
    OrderSchedule back = assignment_to_schedule(circuit, a);
    bool same = back.length() == schedule.length();
    for (int t = 0; same && t < m; ++t) same = back.orders[t] == schedule.orders[t];
    if (!verified.feasible || !check.feasible ||
        check.objective != static_cast<double>(verified.total_swaps) || !same) {
      ok = false;
      detail = "round trip failed at iter " + std::to_string(iter);
    }
  }
  report("criterion 5: ILP size formulas (n=2..8, m=1..20) and 500 assignment round trips", ok,
         ok ? "external MILP solve remains a documented manual step" : detail);
}

// Criterion 6: solver hierarchy — greedy >= beam >= exact; saturated beam exact.
void criterion_hierarchy() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(9001);
  for (int iter = 0; iter < 60 && ok; ++iter) {
    int n = 2 + static_cast<int>(rng() % 4);
    QuantumCircuit circuit = random_circuit(n, 1 + static_cast<int>(rng() % 10), rng);
    std::int64_t exact = solve_exact_dp(circuit).objective;
    SolverConfig narrow;
    narrow.mode = SolveMode::Beam;
    narrow.beam_width = 2;
    std::int64_t beam = solve_beam(circuit, narrow).objective;
    std::int64_t greedy = solve_greedy(circuit).objective;
    SolverConfig sat;
    sat.mode = SolveMode::Beam;
    sat.beam_width = 48;  // 2(n-1)! for n=5
    SolveResult saturated = solve_beam(circuit, sat);
    if (!(exact <= beam) || !(exact <= greedy) || saturated.objective != exact ||
        !saturated.proven_optimal) {
      ok = false;
      detail = "hierarchy violated at iter " + std::to_string(iter);
    }
  }
  const std::vector<std::pair<const char*, std::int64_t>> fixtures = {
      {"peres_8", 1}, {"ex-1_166", 2}, {"ham3_103", 2}, {"3_17_13", 3},
      {"rd32-v0_67", 2}, {"decod24-v1_41", 7}, {"hwb4_52", 8}};
  for (const auto& [name, optimum] : fixtures) {
    QuantumCircuit circuit = fixture_circuit(name);
    SolverConfig sat;
    sat.mode = SolveMode::Beam;
    sat.beam_width = 2 * 24;
    SolveResult beam = solve_beam(circuit, sat);
    if (beam.objective != optimum || !beam.proven_optimal) {
      ok = false;
      detail += std::string(name) + " saturated beam=" + std::to_string(beam.objective) + " ";
    }
  }
  report("criterion 6: greedy >= beam >= exact; saturated beam is exact", ok, detail);
}

}  // namespace

int main() {
  criterion_qft();
  criterion_fixtures();
  criterion_oracle();
  criterion_metric();
  criterion_ilp();
  criterion_hierarchy();
  std::printf("%s (%d criterion(s) failed)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
