#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nnroute/circuit.hpp"

namespace nnroute {

enum class VarKind { X, Y, K };
enum class Integrality { Integer, Binary, Continuous };

struct IlpVar {
  std::string name;
  VarKind kind = VarKind::X;
  int i = 0, j = 0, t = 0;  // 1-based indices as used in the variable name
  double lower = 0.0, upper = 0.0;
  Integrality integrality = Integrality::Integer;
};

struct LinTerm {
  double coef = 0.0;
  int var = 0;  // index into IlpModel::vars
};

struct IlpConstraint {
  std::string name;
  std::vector<LinTerm> terms;
  char sense = 'L';  // 'L' <=, 'G' >=, 'E' =
  double rhs = 0.0;
};

struct RelaxOptions {
  bool x = false;
  bool k = false;
};

/// The location-ordering ILP: integer locations x, pairwise-order indicators
/// y linked by big-M rows, gate adjacency rows, and linearization variables k
/// whose sum is the SWAP count being minimized.
struct IlpModel {
  int n = 0, m = 0;
  double big_M = 0.0;
  RelaxOptions relax;
  std::vector<IlpVar> vars;
  std::vector<IlpConstraint> constraints;
  std::vector<LinTerm> objective;
  std::map<std::string, int> var_index;

  int var(const std::string& name) const {
    auto it = var_index.find(name);
    if (it == var_index.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    return it->second;
  }
  bool has_var(const std::string& name) const { return var_index.count(name) != 0; }

  static std::int64_t expected_var_count(int n, int m) {
    return static_cast<std::int64_t>(n) * n * m - (static_cast<std::int64_t>(n) * n - n) / 2;
  }
  static std::int64_t expected_constraint_count(int n, int m) {
    return 2 * (static_cast<std::int64_t>(n) * n - n) * m - static_cast<std::int64_t>(n) * n + n +
           2 * m;
  }
};

inline std::string x_name(int i, int t) {
  return "x_" + std::to_string(i) + "_" + std::to_string(t);
}
inline std::string y_name(int i, int j, int t) {
  return "y_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t);
}
inline std::string k_name(int i, int j, int t) {
  return "k_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t);
}

/// Builds the model for a circuit. Indices in variable names are 1-based.
/// With relax.x the locations become continuous in [1, n]; with relax.k the
/// linearization variables become continuous in [0, 1]; y stays binary.
inline IlpModel build_model(const QuantumCircuit& circuit, RelaxOptions relax = {}) {
  circuit.validate();
  const int n = circuit.n;
  const int m = circuit.m();
  if (m < 1) throw std::invalid_argument("no gates: the model is empty and the optimum is 0");
  if (n < 2) throw std::invalid_argument("model needs at least 2 qubits");

  IlpModel model;
  model.n = n;
  model.m = m;
  model.big_M = n + 1;
  model.relax = relax;

  auto add_var = [&](IlpVar v) {
    model.var_index[v.name] = static_cast<int>(model.vars.size());
    model.vars.push_back(std::move(v));
  };

  for (int t = 1; t <= m; ++t)
    for (int i = 1; i <= n; ++i)
      add_var({x_name(i, t), VarKind::X, i, 0, t, 1.0, static_cast<double>(n),
               relax.x ? Integrality::Continuous : Integrality::Integer});
  for (int t = 1; t <= m; ++t)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        add_var({y_name(i, j, t), VarKind::Y, i, j, t, 0.0, 1.0, Integrality::Binary});
  for (int t = 1; t < m; ++t)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        add_var({k_name(i, j, t), VarKind::K, i, j, t, 0.0, 1.0,
                 relax.k ? Integrality::Continuous : Integrality::Binary});

  const double M = model.big_M;
  // y_ij = 1 iff x_i < x_j: x_i - x_j <= M(1 - y_ij) - 1 and
  // x_j - x_i <= M y_ij - 1. Together they force the locations at least 1
  // apart and tie y to the pairwise order.
  for (int t = 1; t <= m; ++t)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        model.constraints.push_back(
            {"bigm_lo_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t),
             {{1.0, model.var(x_name(i, t))},
              {-1.0, model.var(x_name(j, t))},
              {M, model.var(y_name(i, j, t))}},
             'L',
             M - 1.0});
  for (int t = 1; t <= m; ++t)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        model.constraints.push_back(
            {"bigm_hi_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t),
             {{1.0, model.var(x_name(j, t))},
              {-1.0, model.var(x_name(i, t))},
              {-M, model.var(y_name(i, j, t))}},
             'L',
             -1.0});
  // Gate adjacency: -1 <= x_i - x_j <= 1, one row per side.
  for (int t = 1; t <= m; ++t) {
    const Gate& g = circuit.gates[t - 1];
    const int i = g.lo() + 1, j = g.hi() + 1;
    model.constraints.push_back(
        {"gate_lo_" + std::to_string(t),
         {{1.0, model.var(x_name(i, t))}, {-1.0, model.var(x_name(j, t))}},
         'G',
         -1.0});
    model.constraints.push_back(
        {"gate_hi_" + std::to_string(t),
         {{1.0, model.var(x_name(i, t))}, {-1.0, model.var(x_name(j, t))}},
         'L',
         1.0});
  }
  // Linearization: -k <= y_t - y_{t+1} <= k, one row per side.
  for (int t = 1; t < m; ++t)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int yv = model.var(y_name(i, j, t));
        const int yn = model.var(y_name(i, j, t + 1));
        const int kv = model.var(k_name(i, j, t));
        model.constraints.push_back(
            {"lin_lo_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t),
             {{1.0, yv}, {-1.0, yn}, {1.0, kv}},
             'G',
             0.0});
        model.constraints.push_back(
            {"lin_hi_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t),
             {{1.0, yv}, {-1.0, yn}, {-1.0, kv}},
             'L',
             0.0});
      }

  for (const IlpVar& v : model.vars)
    if (v.kind == VarKind::K) model.objective.push_back({1.0, model.var_index.at(v.name)});
  return model;
}

namespace detail {

inline std::string format_coef(double c) {
  std::ostringstream out;
  if (c == static_cast<std::int64_t>(c)) {
    out << static_cast<std::int64_t>(c);
  } else {
    out << std::setprecision(12) << c;
  }
  return out.str();
}

inline void append_terms(std::ostringstream& out, const std::vector<LinTerm>& terms,
                         const std::vector<IlpVar>& vars) {
  bool first = true;
  for (const LinTerm& term : terms) {
    double c = term.coef;
    if (first) {
      if (c < 0) out << "- ";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    double mag = c < 0 ? -c : c;
    if (mag != 1.0) out << format_coef(mag) << ' ';
    out << vars[term.var].name;
  }
}

}  // namespace detail

/// Deterministic LP-format export; identical models give byte-identical text.
inline std::string export_lp(const IlpModel& model) {
  std::ostringstream out;
  out << "\\ NNC location-ordering model, n=" << model.n << " m=" << model.m << '\n';
  out << "Minimize\n obj: ";
  if (model.objective.empty()) {
    out << "0";
  } else {
    detail::append_terms(out, model.objective, model.vars);
  }
  out << '\n';
  out << "Subject To\n";
  for (const IlpConstraint& c : model.constraints) {
    out << ' ' << c.name << ": ";
    detail::append_terms(out, c.terms, model.vars);
    out << (c.sense == 'L' ? " <= " : c.sense == 'G' ? " >= " : " = ");
    out << detail::format_coef(c.rhs) << '\n';
  }
  out << "Bounds\n";
  for (const IlpVar& v : model.vars)
    if (v.integrality != Integrality::Binary)
      out << ' ' << detail::format_coef(v.lower) << " <= " << v.name
          << " <= " << detail::format_coef(v.upper) << '\n';
  bool any_general = false;
  for (const IlpVar& v : model.vars) any_general = any_general || v.integrality == Integrality::Integer;
  if (any_general) {
    out << "General\n";
    for (const IlpVar& v : model.vars)
      if (v.integrality == Integrality::Integer) out << ' ' << v.name << '\n';
  }
  bool any_binary = false;
  for (const IlpVar& v : model.vars) any_binary = any_binary || v.integrality == Integrality::Binary;
  if (any_binary) {
    out << "Binary\n";
    for (const IlpVar& v : model.vars)
      if (v.integrality == Integrality::Binary) out << ' ' << v.name << '\n';
  }
  out << "End\n";
  return out.str();
}

}  // namespace nnroute
