#include "qproof/qdimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace qproof {

namespace {

std::vector<long> int_tokens(const std::string& s, int line) {
  std::vector<long> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw parse_error(line, "expected integer, got '" + tok + "'");
    }
    if (used != tok.size())
      throw parse_error(line, "expected integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Qbf parse_qdimacs(std::istream& in) {
  Qbf f;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  long header_vars = 0, header_clauses = 0;
  bool in_prefix = true;
  int clauses_read = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream peek(line);
    std::string first;
    if (!(peek >> first)) continue;  // blank
    if (first == "c" || first[0] == 'c') continue;

    if (first == "p") {
      if (saw_header) throw parse_error(lineno, "duplicate header");
      std::string cnf;
      peek >> cnf;
      if (cnf != "cnf") throw parse_error(lineno, "expected 'p cnf'");
      if (!(peek >> header_vars >> header_clauses) || header_vars < 0 ||
          header_clauses < 0)
        throw parse_error(lineno, "malformed header");
      std::string rest;
      if (peek >> rest) throw parse_error(lineno, "trailing tokens in header");
      saw_header = true;
      continue;
    }
    if (!saw_header) throw parse_error(lineno, "missing 'p cnf' header");

    if (first == "a" || first == "e") {
      if (!in_prefix)
        throw parse_error(lineno, "quantifier line after first clause");
      Quant q = first == "e" ? Quant::Exists : Quant::Forall;
      std::vector<long> ids =
          int_tokens(line.substr(line.find(first) + 1), lineno);
      if (ids.empty() || ids.back() != 0)
        throw parse_error(lineno, "quantifier line must end with 0");
      ids.pop_back();
      if (ids.empty()) continue;  // empty block, ignore
      int block;
      if (f.block_count() > 0 && f.block(f.block_count()).quant == q)
        block = f.block_count();  // merge with previous same-quantifier block
      else
        block = f.add_block(q);
      for (long v : ids) {
        if (v <= 0 || v > header_vars)
          throw parse_error(lineno, "undeclared variable " + std::to_string(v));
        if (f.declared(static_cast<int>(v)))
          throw parse_error(lineno,
                            "variable " + std::to_string(v) + " redeclared");
        f.declare_in_block(static_cast<int>(v), block);
      }
      continue;
    }

    // Clause line.
    in_prefix = false;
    std::vector<long> lits = int_tokens(line, lineno);
    if (lits.empty() || lits.back() != 0)
      throw parse_error(lineno, "clause must end with 0");
    lits.pop_back();
    Clause c;
    for (long l : lits) {
      long v = l < 0 ? -l : l;
      if (v == 0 || v > header_vars)
        throw parse_error(lineno, "undeclared variable " + std::to_string(v));
      if (!f.declared(static_cast<int>(v)))
        throw parse_error(lineno,
                          "free variable " + std::to_string(v) +
                              " (not in any quantifier block)");
      c.push_back(static_cast<Lit>(l));
    }
    c = canonical_clause(std::move(c));
    if (clause_is_tautology(c))
      throw parse_error(lineno, "tautological clause rejected");
    f.add_clause(std::move(c));
    ++clauses_read;
  }

  if (!saw_header) throw parse_error(lineno, "missing 'p cnf' header");
  if (clauses_read != header_clauses)
    throw parse_error(lineno, "header announces " +
                                  std::to_string(header_clauses) +
                                  " clauses, found " +
                                  std::to_string(clauses_read));
  return f;
}

Qbf parse_qdimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_qdimacs(in);
}

Qbf parse_qdimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_qdimacs(in);
}

void emit_qdimacs(const Qbf& f, std::ostream& out) {
  out << "p cnf " << f.max_var() << ' ' << f.clause_count() << '\n';
  for (int b = 1; b <= f.block_count(); ++b) {
    const Block& blk = f.block(b);
    if (blk.vars.empty()) continue;
    out << (blk.quant == Quant::Exists ? 'e' : 'a');
    for (int v : blk.vars) out << ' ' << v;
    out << " 0\n";
  }
  for (const Clause& c : f.matrix()) {
    for (Lit l : c) out << l << ' ';
    out << "0\n";
  }
}

std::string emit_qdimacs_string(const Qbf& f) {
  std::ostringstream out;
  emit_qdimacs(f, out);
  return out.str();
}

}  // namespace qproof
