#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnroute {

enum class RawGateKind { ToffoliFamily, FredkinFamily, Peres, SingleQubit, Other };

/// A gate as it appears in a RevLib-style .real file, before decomposition.
/// For ToffoliFamily the last line is the target; for FredkinFamily the last
/// two lines are the swap targets.
struct RawGate {
  RawGateKind kind = RawGateKind::Other;
  std::vector<int> lines;  // 0-based qubit indices, pairwise distinct
  int control_count = 0;
  std::string mnemonic;
};

struct RawCircuit {
  int n = 0;
  std::vector<std::string> variable_names;
  std::vector<RawGate> gates;
  std::string source_name;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

inline bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace detail

/// Parses the `.real` dialect: '#' comments, header directives, gate lines
/// between .begin and .end. Negative-control markers ('-' prefix) are
/// stripped; only qubit identity matters for adjacency.
inline RawCircuit parse_real(const std::string& text, const std::string& source_name = "") {
  RawCircuit circuit;
  circuit.source_name = source_name;
  std::map<std::string, int> var_index;
  bool have_numvars = false;
  bool in_body = false;
  bool ended = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError(source_name + ":" + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    std::string head = detail::lower(tokens[0]);
    if (head[0] == '.') {
      if (head == ".numvars") {
        if (tokens.size() != 2 || !detail::all_digits(tokens[1])) fail(".numvars expects a count");
        circuit.n = std::stoi(tokens[1]);
        if (circuit.n < 1) fail(".numvars must be at least 1");
        have_numvars = true;
      } else if (head == ".variables") {
        if (!have_numvars) fail(".variables before .numvars");
        if (static_cast<int>(tokens.size()) - 1 != circuit.n) fail(".variables count mismatch");
        for (int i = 1; i < static_cast<int>(tokens.size()); ++i) {
          circuit.variable_names.push_back(tokens[i]);
          if (!var_index.emplace(tokens[i], i - 1).second) fail("duplicate variable name");
        }
      } else if (head == ".begin") {
        if (!have_numvars) fail(".begin before .numvars");
        in_body = true;
      } else if (head == ".end") {
        in_body = false;
        ended = true;
      }
      // .version/.inputs/.outputs/.constants/.garbage carry no adjacency
      // information and are skipped.
      continue;
    }

    if (!in_body) fail("gate line outside .begin/.end: " + tokens[0]);

    // Default variable names q1..qn when the file omits .variables.
    if (circuit.variable_names.empty()) {
      for (int i = 0; i < circuit.n; ++i) {
        std::string name = "q" + std::to_string(i + 1);
        circuit.variable_names.push_back(name);
        var_index[name] = i;
      }
    }

    RawGate gate;
    gate.mnemonic = head;
    for (size_t i = 1; i < tokens.size(); ++i) {
      std::string name = tokens[i];
      if (!name.empty() && name[0] == '-') name.erase(0, 1);  // negative control
      auto it = var_index.find(name);
      if (it == var_index.end()) fail("undeclared variable '" + name + "'");
      gate.lines.push_back(it->second);
    }
    {
      std::vector<int> sorted = gate.lines;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("gate with repeated lines");
    }
    if (gate.lines.empty()) fail("gate without lines");

    const int k = static_cast<int>(gate.lines.size());
    if (head[0] == 't' && (head.size() == 1 || detail::all_digits(head.substr(1)))) {
      if (head.size() > 1 && std::stoi(head.substr(1)) != k) fail("t-gate arity mismatch");
      if (k == 1) {
        gate.kind = RawGateKind::SingleQubit;
      } else {
        gate.kind = RawGateKind::ToffoliFamily;
        gate.control_count = k - 1;
      }
    } else if (head[0] == 'f' && (head.size() == 1 || detail::all_digits(head.substr(1)))) {
      if (head.size() > 1 && std::stoi(head.substr(1)) != k) fail("f-gate arity mismatch");
      if (k < 2) fail("fredkin gate needs two swap targets");
      gate.kind = RawGateKind::FredkinFamily;
      gate.control_count = k - 2;
    } else if (head == "p") {
      if (k != 3) fail("peres gate expects exactly 3 lines");
      gate.kind = RawGateKind::Peres;
      gate.control_count = 2;
    } else if (k == 1) {
      gate.kind = RawGateKind::SingleQubit;  // h, v, v+, x, z, ... on one line
    } else if ((head == "v" || head == "v+") && k == 2) {
      gate.kind = RawGateKind::Other;  // controlled V, already a 2-qubit gate
    } else {
      gate.kind = RawGateKind::Other;
    }
    circuit.gates.push_back(std::move(gate));
  }

  if (!have_numvars) throw ParseError(source_name + ": missing .numvars header");
  (void)ended;
  return circuit;
}

}  // namespace nnroute
