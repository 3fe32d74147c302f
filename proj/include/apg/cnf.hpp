#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "apg/error.hpp"

namespace apg {

/// 3-CNF over variables 1..num_vars; a literal is +v or -v.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Same clause format; variable i is chosen by Satisfier when i is odd and
/// by Falsifier when i is even, in increasing index order.
struct QbfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  static QbfFormula from_cnf(const CnfFormula& f) { return {f.num_vars, f.clauses}; }
  CnfFormula matrix() const { return {num_vars, clauses}; }
};

enum class QbfWinner { Satisfier, Falsifier };

inline const char* to_string(QbfWinner w) { return w == QbfWinner::Satisfier ? "Satisfier" : "Falsifier"; }

/// Checks 3 literals per clause, literals in range, at least one clause.
inline void validate_cnf(int num_vars, const std::vector<std::vector<int>>& clauses) {
  if (num_vars < 1) throw Error(ErrorKind::Parse, "formula needs at least one variable");
  if (clauses.empty()) throw Error(ErrorKind::Parse, "formula needs at least one clause");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (clauses[c].size() != 3)
      throw Error(ErrorKind::BadClauseSize, "clause " + std::to_string(c) + " has " +
                                                std::to_string(clauses[c].size()) + " literals, expected 3");
    for (int lit : clauses[c])
      if (lit == 0 || std::abs(lit) > num_vars)
        throw Error(ErrorKind::Parse, "clause " + std::to_string(c) + " mentions undeclared variable " +
                                          std::to_string(std::abs(lit)));
  }
}

inline void validate(const CnfFormula& f) { validate_cnf(f.num_vars, f.clauses); }

inline void validate(const QbfFormula& q) {
  validate_cnf(q.num_vars, q.clauses);
  if (q.num_vars % 2 != 0)
    throw Error(ErrorKind::OddVarCount, std::to_string(q.num_vars) + " variables; the prefix needs an even count");
}

/// DIMACS CNF: `c` comments, one `p cnf V C` header, clauses of exactly
/// three literals terminated by 0 (may span lines). Errors carry
/// `source:line`.
inline CnfFormula parse_dimacs(std::istream& in, const std::string& source = "<input>") {
  CnfFormula f;
  bool header = false;
  long declared_clauses = 0;
  std::vector<int> current;
  int clause_line = 0;
  std::string line;
  int lineno = 0;
  auto fail = [&](ErrorKind k, int at, const std::string& msg) {
    throw Error(k, source + ":" + std::to_string(at) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      long v = -1, c = -1;
      if (header) fail(ErrorKind::Parse, lineno, "second problem line");
      if (!(ls >> fmt >> v >> c) || fmt != "cnf" || v < 1 || c < 1)
        fail(ErrorKind::Parse, lineno, "expected 'p cnf <vars> <clauses>'");
      if (ls >> tok) fail(ErrorKind::Parse, lineno, "trailing text after problem line");
      header = true;
      f.num_vars = static_cast<int>(v);
      declared_clauses = c;
      continue;
    }
    if (!header) fail(ErrorKind::Parse, lineno, "clause before the 'p cnf' line");
    do {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') fail(ErrorKind::Parse, lineno, "bad literal '" + tok + "'");
      if (lit == 0) {
        if (current.size() != 3)
          fail(ErrorKind::BadClauseSize, clause_line,
               "clause has " + std::to_string(current.size()) + " literals, expected 3");
        f.clauses.push_back(current);
        current.clear();
        continue;
      }
      if (std::labs(lit) > f.num_vars)
        fail(ErrorKind::Parse, lineno, "variable " + std::to_string(std::labs(lit)) + " exceeds declared " +
                                           std::to_string(f.num_vars));
      if (current.empty()) clause_line = lineno;
      current.push_back(static_cast<int>(lit));
    } while (ls >> tok);
  }
  if (!header) fail(ErrorKind::Parse, lineno, "missing 'p cnf' line");
  if (!current.empty()) fail(ErrorKind::Parse, clause_line, "clause not terminated by 0");
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    fail(ErrorKind::Parse, lineno,
         "header declares " + std::to_string(declared_clauses) + " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

inline CnfFormula parse_dimacs_string(const std::string& text, const std::string& source = "<string>") {
  std::istringstream in(text);
  return parse_dimacs(in, source);
}

inline CnfFormula load_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open");
  return parse_dimacs(in, path);
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) os << lit << " ";
    os << "0\n";
  }
  return os.str();
}

inline bool literal_true(int lit, std::uint32_t assignment) {
  const bool val = (assignment >> (std::abs(lit) - 1)) & 1U;
  return lit > 0 ? val : !val;
}

inline bool satisfies(const std::vector<std::vector<int>>& clauses, std::uint32_t assignment) {
  for (const auto& c : clauses) {
    bool sat = false;
    for (int lit : c) sat |= literal_true(lit, assignment);
    if (!sat) return false;
  }
  return true;
}

/// Exhaustive satisfiability check; bit i-1 of an assignment is x_i.
inline bool sat_brute(const CnfFormula& f) {
  validate(f);
  if (f.num_vars > 24) throw Error(ErrorKind::TooLarge, "sat_brute handles at most 24 variables");
  const std::uint32_t n = 1U << f.num_vars;
  for (std::uint32_t a = 0; a < n; ++a)
    if (satisfies(f.clauses, a)) return true;
  return false;
}

namespace detail {
inline bool satisfier_wins(const QbfFormula& q, int var, std::uint32_t assignment) {
  if (var > q.num_vars) return satisfies(q.clauses, assignment);
  const bool satisfier_turn = var % 2 == 1;
  for (std::uint32_t bit : {0U, 1U}) {
    const bool w = satisfier_wins(q, var + 1, assignment | (bit << (var - 1)));
    if (w == satisfier_turn) return w;
  }
  return !satisfier_turn;
}
}  // namespace detail

/// Minimax over the valuation game: x1 by Satisfier, x2 by Falsifier, ...
inline QbfWinner qbf_brute(const QbfFormula& q) {
  validate(q);
  if (q.num_vars > 12) throw Error(ErrorKind::TooLarge, "qbf_brute handles at most 12 variables");
  return detail::satisfier_wins(q, 1, 0) ? QbfWinner::Satisfier : QbfWinner::Falsifier;
}

}  // namespace apg
