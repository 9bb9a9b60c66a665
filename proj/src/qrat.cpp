#include "qproof/qrat.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qproof/dependency.hpp"
#include "qproof/prop.hpp"

namespace qproof {

QratStep QratStep::declare(int fresh, int anchor_var) {
  QratStep s;
  s.kind = Kind::DeclareVar;
  s.new_var = fresh;
  s.anchor = anchor_var;
  return s;
}

QratStep QratStep::add(std::vector<Lit> lits) {
  QratStep s;
  s.kind = Kind::Add;
  s.lits = std::move(lits);
  return s;
}

QratStep QratStep::del(std::vector<Lit> lits) {
  QratStep s;
  s.kind = Kind::Delete;
  s.lits = std::move(lits);
  return s;
}

QratStep QratStep::drop(Lit l, std::vector<Lit> remainder, Hint hint) {
  QratStep s;
  s.kind = Kind::DropUniv;
  s.drop_lit = l;
  s.lits = std::move(remainder);
  s.hint = hint;
  return s;
}

bool QratProof::adds_empty_clause() const {
  for (const QratStep& s : steps)
    if (s.kind == QratStep::Kind::Add && s.lits.empty()) return true;
  return false;
}

QratVerdict check_qrat_proof(const Qbf& f, const QratProof& p,
                             Qbf* final_state) {
  Qbf state = f;
  bool empty_added = false;

  auto invalid = [](int step, const std::string& rule,
                    const std::string& reason) {
    return QratVerdict{QratOutcome::Invalid, step, rule, reason};
  };

  for (size_t i = 0; i < p.steps.size(); ++i) {
    const QratStep& s = p.steps[i];
    int stepno = static_cast<int>(i) + 1;
    switch (s.kind) {
      case QratStep::Kind::DeclareVar: {
        if (s.new_var <= 0 || state.declared(s.new_var))
          return invalid(stepno, "declare", "id not fresh");
        if (!state.declared(s.anchor))
          return invalid(stepno, "declare", "anchor undeclared");
        if (!state.existential(s.anchor))
          return invalid(stepno, "declare", "anchor block is universal");
        state.declare_like(s.new_var, s.anchor);
        break;
      }
      case QratStep::Kind::Add: {
        for (Lit l : s.lits)
          if (!state.declared(var_of(l)))
            return invalid(stepno, "add", "undeclared variable " +
                                              std::to_string(var_of(l)));
        Clause c = canonical_clause(s.lits);
        bool ok = is_asymmetric_tautology(state.matrix(), c);
        if (!ok && !s.lits.empty()) {
          Lit pivot = s.lits.front();
          if (state.existential(var_of(pivot)))
            ok = is_qrat_clause(state, c, pivot);
        }
        if (!ok)
          return invalid(stepno, "add",
                         "clause " + clause_to_string(c) +
                             " is neither propagation-implied nor a "
                             "pivot-justified addition");
        if (c.empty()) empty_added = true;
        state.add_clause(std::move(c));
        break;
      }
      case QratStep::Kind::Delete: {
        Clause c = canonical_clause(s.lits);
        int idx = state.find_clause(c);
        if (idx < 0)
          return invalid(stepno, "delete",
                         "clause " + clause_to_string(c) + " not present");
        state.remove_clause(idx);
        break;
      }
      case QratStep::Kind::DropUniv: {
        if (!state.declared(var_of(s.drop_lit)) ||
            !state.universal(var_of(s.drop_lit)))
          return invalid(stepno, "drop", "literal is not universal");
        Clause full = s.lits;
        full.push_back(s.drop_lit);
        full = canonical_clause(std::move(full));
        int idx = state.find_clause(full);
        if (idx < 0)
          return invalid(stepno, "drop",
                         "clause " + clause_to_string(full) + " not present");
        auto qrat_u = [&] { return is_qrat_clause(state, full, s.drop_lit); };
        auto eur = [&] { return eur_droppable(state, full, s.drop_lit); };
        bool ok = s.hint == QratStep::Hint::Eur ? (eur() || qrat_u())
                                                : (qrat_u() || eur());
        if (!ok)
          return invalid(stepno, "drop",
                         "universal literal " + std::to_string(s.drop_lit) +
                             " is not removable from " +
                             clause_to_string(full));
        Clause reduced;
        for (Lit l : full)
          if (l != s.drop_lit) reduced.push_back(l);
        state.set_clause(idx, std::move(reduced));
        break;
      }
    }
  }
  if (final_state) *final_state = std::move(state);
  QratVerdict v;
  v.outcome = empty_added ? QratOutcome::VerifiedRefutation
                          : QratOutcome::VerifiedDerivation;
  return v;
}

namespace {

long parse_int_tok(const std::string& tok, int line) {
  size_t used = 0;
  long v;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw parse_error(line, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size())
    throw parse_error(line, "expected integer, got '" + tok + "'");
  return v;
}

std::vector<Lit> parse_lits(const std::vector<std::string>& toks, size_t from,
                            int line) {
  if (toks.back() != "0")
    throw parse_error(line, "step line must end with 0");
  std::vector<Lit> lits;
  for (size_t i = from; i + 1 < toks.size(); ++i) {
    long v = parse_int_tok(toks[i], line);
    if (v == 0) throw parse_error(line, "literal 0 before end of line");
    lits.push_back(static_cast<Lit>(v));
  }
  return lits;
}

}  // namespace

QratProof parse_qrat(std::istream& in) {
  QratProof proof;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "c") continue;

    if (toks[0] == "x") {
      if (toks.size() != 4 || toks[3] != "0")
        throw parse_error(lineno, "malformed declaration line");
      long fresh = parse_int_tok(toks[1], lineno);
      long anchor = parse_int_tok(toks[2], lineno);
      if (fresh <= 0 || anchor <= 0)
        throw parse_error(lineno, "declaration ids must be positive");
      proof.steps.push_back(
          QratStep::declare(static_cast<int>(fresh), static_cast<int>(anchor)));
    } else if (toks[0] == "d") {
      proof.steps.push_back(QratStep::del(parse_lits(toks, 1, lineno)));
    } else if (toks[0] == "u") {
      std::vector<Lit> lits = parse_lits(toks, 1, lineno);
      if (lits.empty())
        throw parse_error(lineno, "drop line lacks its universal literal");
      Lit l = lits.front();
      lits.erase(lits.begin());
      proof.steps.push_back(QratStep::drop(l, std::move(lits)));
    } else {
      proof.steps.push_back(QratStep::add(parse_lits(toks, 0, lineno)));
    }
  }
  return proof;
}

QratProof parse_qrat_string(const std::string& text) {
  std::istringstream in(text);
  return parse_qrat(in);
}

QratProof parse_qrat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_qrat(in);
}

void emit_qrat(const QratProof& p, std::ostream& out) {
  for (const QratStep& s : p.steps) {
    switch (s.kind) {
      case QratStep::Kind::DeclareVar:
        out << "x " << s.new_var << ' ' << s.anchor << " 0\n";
        break;
      case QratStep::Kind::Add:
        for (Lit l : s.lits) out << l << ' ';
        out << "0\n";
        break;
      case QratStep::Kind::Delete:
        out << 'd';
        for (Lit l : s.lits) out << ' ' << l;
        out << " 0\n";
        break;
      case QratStep::Kind::DropUniv:
        out << "u " << s.drop_lit;
        for (Lit l : s.lits) out << ' ' << l;
        out << " 0\n";
        break;
    }
  }
}

std::string emit_qrat_string(const QratProof& p) {
  std::ostringstream out;
  emit_qrat(p, out);
  return out.str();
}

void emit_var_map(const VarTable& table, std::ostream& out) {
  for (int id : table.interned_ids()) {
    const VarTable::Entry* e = table.entry_of(id);
    out << "m " << id << ' ' << e->base;
    for (const Annotation::Entry& a : e->ann.entries())
      out << ' ' << (a.value ? a.var : -a.var);
    out << " 0\n";
  }
}

std::string emit_var_map_string(const VarTable& table) {
  std::ostringstream out;
  emit_var_map(table, out);
  return out.str();
}

}  // namespace qproof
