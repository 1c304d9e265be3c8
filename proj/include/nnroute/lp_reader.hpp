#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnroute {

/// Minimal reader for the LP dialect written by export_lp. Enough to
/// round-trip our own files: objective, one-line constraints, bounds and
/// integrality sections.
struct LpFile {
  struct Term {
    double coef = 0.0;
    std::string var;
  };
  struct Row {
    std::string name;
    std::vector<Term> terms;
    char sense = 'L';
    double rhs = 0.0;
  };
  std::vector<Term> objective;
  std::vector<Row> rows;
  std::map<std::string, std::pair<double, double>> bounds;
  std::vector<std::string> general_vars;
  std::vector<std::string> binary_vars;

  /// Every variable name appearing anywhere in the file.
  std::vector<std::string> variables() const {
    std::map<std::string, bool> seen;
    auto note = [&](const std::string& v) { seen[v] = true; };
    for (const Term& t : objective) note(t.var);
    for (const Row& r : rows)
      for (const Term& t : r.terms) note(t.var);
    for (const auto& [v, b] : bounds) note(v);
    for (const std::string& v : general_vars) note(v);
    for (const std::string& v : binary_vars) note(v);
    std::vector<std::string> out;
    for (const auto& [v, flag] : seen) out.push_back(v);
    return out;
  }
};

namespace lp_detail {

inline bool is_number_start(const std::string& tok) {
  return !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '.');
}

// Parses "c1 v1 + c2 v2 - v3 ..." from a token stream until tokens run out.
inline std::vector<LpFile::Term> parse_terms(std::vector<std::string>& toks) {
  std::vector<LpFile::Term> terms;
  double sign = 1.0;
  size_t i = 0;
  while (i < toks.size()) {
    const std::string& tok = toks[i];
    if (tok == "+") {
      sign = 1.0;
      ++i;
    } else if (tok == "-") {
      sign = -1.0;
      ++i;
    } else if (is_number_start(tok)) {
      double coef = std::stod(tok);
      ++i;
      if (i < toks.size() && !is_number_start(toks[i]) && toks[i] != "+" && toks[i] != "-") {
        terms.push_back({sign * coef, toks[i]});
        ++i;
      } else if (coef == 0.0) {
        // constant-zero objective
      } else {
        throw std::invalid_argument("dangling numeric constant in expression");
      }
      sign = 1.0;
    } else {
      terms.push_back({sign, tok});
      sign = 1.0;
      ++i;
    }
  }
  return terms;
}

}  // namespace lp_detail

inline LpFile read_lp(const std::string& text) {
  LpFile lp;
  enum class Section { None, Objective, Constraints, Bounds, General, Binary, Done };
  Section section = Section::None;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '\\') continue;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "Minimize" || first == "Maximize") {
      section = Section::Objective;
      continue;
    }
    if (first == "Subject") {
      section = Section::Constraints;
      continue;
    }
    if (first == "Bounds") {
      section = Section::Bounds;
      continue;
    }
    if (first == "General") {
      section = Section::General;
      continue;
    }
    if (first == "Binary") {
      section = Section::Binary;
      continue;
    }
    if (first == "End") {
      section = Section::Done;
      continue;
    }

    std::vector<std::string> toks{first};
    std::string tok;
    while (ls >> tok) toks.push_back(tok);

    switch (section) {
      case Section::Objective: {
        if (!toks.empty() && toks[0].back() == ':') toks.erase(toks.begin());
        auto terms = lp_detail::parse_terms(toks);
        lp.objective.insert(lp.objective.end(), terms.begin(), terms.end());
        break;
      }
      case Section::Constraints: {
        LpFile::Row row;
        if (toks.empty() || toks[0].back() != ':')
          throw std::invalid_argument("constraint without a name: " + line);
        row.name = toks[0].substr(0, toks[0].size() - 1);
        toks.erase(toks.begin());
        size_t rel = toks.size();
        for (size_t i = 0; i < toks.size(); ++i)
          if (toks[i] == "<=" || toks[i] == ">=" || toks[i] == "=") {
            rel = i;
            break;
          }
        if (rel + 2 != toks.size())
          throw std::invalid_argument("malformed constraint: " + line);
        row.sense = toks[rel] == "<=" ? 'L' : toks[rel] == ">=" ? 'G' : 'E';
        row.rhs = std::stod(toks[rel + 1]);
        std::vector<std::string> lhs(toks.begin(), toks.begin() + rel);
        row.terms = lp_detail::parse_terms(lhs);
        lp.rows.push_back(std::move(row));
        break;
      }
      case Section::Bounds: {
        // "<lo> <= <var> <= <hi>"
        if (toks.size() != 5 || toks[1] != "<=" || toks[3] != "<=")
          throw std::invalid_argument("malformed bound: " + line);
        lp.bounds[toks[2]] = {std::stod(toks[0]), std::stod(toks[4])};
        break;
      }
      case Section::General:
        for (const std::string& v : toks) lp.general_vars.push_back(v);
        break;
      case Section::Binary:
        for (const std::string& v : toks) lp.binary_vars.push_back(v);
        break;
      default:
        throw std::invalid_argument("content outside any LP section: " + line);
    }
  }
  return lp;
}

}  // namespace nnroute
