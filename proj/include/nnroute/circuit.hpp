#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nnroute {

/// A 2-qubit gate. The pair {a, b} is unordered: which qubit is control and
/// which is target has no bearing on adjacency. Qubit ids are 0-based.
struct Gate {
  int a = 0;
  int b = 0;
  std::string label;  // informational only, e.g. "CNOT", "CV"

  Gate() = default;
  Gate(int qa, int qb, std::string lbl = {}) : a(qa), b(qb), label(std::move(lbl)) {
    if (a == b) throw std::invalid_argument("gate acts on a single qubit twice");
  }

  int lo() const { return a < b ? a : b; }
  int hi() const { return a < b ? b : a; }

  friend bool operator==(const Gate& x, const Gate& y) {
    return x.lo() == y.lo() && x.hi() == y.hi();
  }
  friend bool operator!=(const Gate& x, const Gate& y) { return !(x == y); }
};

/// A quantum circuit reduced to what matters for nearest-neighbor compliance:
/// a qubit count and an ordered sequence of 2-qubit gates.
struct QuantumCircuit {
  int n = 0;
  std::vector<Gate> gates;
  std::string name;

  int m() const { return static_cast<int>(gates.size()); }

  void validate() const {
    if (n < 1) throw std::invalid_argument("circuit needs at least one qubit");
    for (const Gate& g : gates) {
      if (g.a < 0 || g.a >= n || g.b < 0 || g.b >= n)
        throw std::invalid_argument("gate references qubit outside [0, n)");
      if (g.a == g.b) throw std::invalid_argument("gate with identical qubits");
    }
  }
};

}  // namespace nnroute
