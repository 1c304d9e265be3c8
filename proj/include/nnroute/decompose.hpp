#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "nnroute/circuit.hpp"
#include "nnroute/real.hpp"

namespace nnroute {

class DecomposeError : public std::runtime_error {
 public:
  explicit DecomposeError(const std::string& what) : std::runtime_error(what) {}
};

/// The Peres pair sequence is taken from the bundled peres_8.real fixture
/// rather than hard-coded. This is the fixture text verbatim; the file also
/// ships under fixtures/.
inline const char* peres_fixture_text() {
  return "# peres_8: a single Peres gate realized with elementary 2-qubit gates\n"
         ".version 1.0\n"
         ".numvars 3\n"
         ".variables a b c\n"
         ".inputs a b c\n"
         ".outputs a b c\n"
         ".begin\n"
         "v b c\n"
         "v a c\n"
         "t2 a b\n"
         "v+ b c\n"
         ".end\n";
}

/// Pair template for Peres(a,b,c) as index pairs over (a,b,c) = (0,1,2),
/// derived by parsing the bundled fixture.
inline const std::vector<std::array<int, 2>>& peres_pair_template() {
  static const std::vector<std::array<int, 2>> pairs = [] {
    RawCircuit raw = parse_real(peres_fixture_text(), "peres_8.real");
    std::vector<std::array<int, 2>> out;
    for (const RawGate& g : raw.gates) {
      if (g.lines.size() != 2)
        throw DecomposeError("peres template must contain only 2-qubit gates");
      out.push_back({g.lines[0], g.lines[1]});
    }
    if (out.size() != 4) throw DecomposeError("peres template must have 4 gates");
    return out;
  }();
  return pairs;
}

namespace detail {

inline int trailing_zeros(int i) {
  int c = 0;
  while ((i & 1) == 0) {
    i >>= 1;
    ++c;
  }
  return c;
}

// Pair sequence of the k-control Toffoli decomposition (Barenco-style
// networks). k=1 is a plain CNOT; k=2 the three-bit network; k>=3 the n-bit
// network: reverse of the (k-1)-control sequence followed by an alternating
// CNOT / controlled-V tail whose control pattern closes a Gray cycle.
inline void toffoli_pairs(const std::vector<int>& controls, int target, std::vector<Gate>& out) {
  const int k = static_cast<int>(controls.size());
  if (k == 1) {
    out.emplace_back(controls[0], target, "CNOT");
    return;
  }
  if (k == 2) {
    const int c1 = controls[0], c2 = controls[1];
    out.emplace_back(c2, target, "CV");
    out.emplace_back(c1, c2, "CNOT");
    out.emplace_back(c2, target, "CV+");
    out.emplace_back(c1, c2, "CNOT");
    out.emplace_back(c1, target, "CV");
    return;
  }
  std::vector<Gate> prev;
  toffoli_pairs(std::vector<int>(controls.begin(), controls.end() - 1), target, prev);
  out.insert(out.end(), prev.rbegin(), prev.rend());
  const int ck = controls[k - 1];
  const int half = 1 << (k - 1);
  for (int i = 1; i <= half; ++i) {
    const int j = (i == half) ? 1 : k - 1 - trailing_zeros(i);
    out.emplace_back(controls[j - 1], ck, "CNOT");
    out.emplace_back(ck, target, "CV");
  }
}

}  // namespace detail

struct DecomposeStats {
  int dropped_single_qubit = 0;
};

/// Deterministically lowers a parsed circuit to 2-qubit gates: single-qubit
/// gates are removed, multi-qubit gates expand by fixed rules, 2-qubit gates
/// pass through unchanged. Toffoli gates are supported up to 4 controls.
inline QuantumCircuit decompose(const RawCircuit& raw, DecomposeStats* stats = nullptr) {
  QuantumCircuit circuit;
  circuit.n = raw.n;
  circuit.name = raw.source_name;
  DecomposeStats local;

  // Fredkin expansion recurses into a Toffoli with one extra control.
  auto expand_toffoli = [&](const std::vector<int>& controls, int target) {
    if (static_cast<int>(controls.size()) > 4)
      throw DecomposeError("Toffoli gates with more than 4 controls are not supported");
    detail::toffoli_pairs(controls, target, circuit.gates);
  };

  for (const RawGate& g : raw.gates) {
    switch (g.kind) {
      case RawGateKind::SingleQubit:
        ++local.dropped_single_qubit;
        break;
      case RawGateKind::ToffoliFamily: {
        std::vector<int> controls(g.lines.begin(), g.lines.end() - 1);
        expand_toffoli(controls, g.lines.back());
        break;
      }
      case RawGateKind::FredkinFamily: {
        const int u = g.lines[g.lines.size() - 2];
        const int v = g.lines[g.lines.size() - 1];
        if (g.control_count == 0) {
          circuit.gates.emplace_back(u, v, "SWAP");
          break;
        }
        if (g.control_count >= 4)
          throw DecomposeError("Fredkin gates with more than 3 controls are not supported");
        circuit.gates.emplace_back(v, u, "CNOT");
        std::vector<int> controls(g.lines.begin(), g.lines.end() - 2);
        controls.push_back(u);
        expand_toffoli(controls, v);
        circuit.gates.emplace_back(v, u, "CNOT");
        break;
      }
      case RawGateKind::Peres: {
        for (const auto& pair : peres_pair_template())
          circuit.gates.emplace_back(g.lines[pair[0]], g.lines[pair[1]], "P");
        break;
      }
      case RawGateKind::Other: {
        if (g.lines.size() == 2) {
          std::string label = g.mnemonic == "v+" ? "CV+" : g.mnemonic == "v" ? "CV" : g.mnemonic;
          circuit.gates.emplace_back(g.lines[0], g.lines[1], label);
          break;
        }
        throw DecomposeError("unsupported multi-qubit gate '" + g.mnemonic + "'");
      }
    }
  }
  circuit.validate();
  if (stats) *stats = local;
  return circuit;
}

/// Quantum Fourier Transform circuit after dropping single-qubit gates:
/// controlled-phase pairs {i, j} for each target i and every j > i, giving
/// n(n-1)/2 gates in total.
inline QuantumCircuit generate_qft(int n) {
  if (n < 2) throw std::invalid_argument("QFT needs at least 2 qubits");
  QuantumCircuit circuit;
  circuit.n = n;
  circuit.name = "QFT_QFT" + std::to_string(n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) circuit.gates.emplace_back(i, j, "CP");
  return circuit;
}

}  // namespace nnroute
