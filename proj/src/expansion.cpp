#include "qproof/expansion.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace qproof {

const ExpansionStep* ExpansionProof::step_with_id(int id) const {
  for (const ExpansionStep& s : steps)
    if (s.id == id) return &s;
  return nullptr;
}

AnnClause axiom_ircalc(const Qbf& f, int clause_index) {
  if (clause_index < 1 || clause_index > f.clause_count())
    throw std::out_of_range("clause index out of range");
  const Clause& c = f.clause(clause_index - 1);
  if (clause_is_tautology(c)) throw rule_error("axiom of a tautology");

  Annotation falsifying;
  for (Lit l : c)
    if (f.universal(var_of(l))) falsifying.set(f, var_of(l), l < 0);

  AnnClause out;
  for (Lit l : c) {
    if (f.universal(var_of(l))) continue;
    out.push_back(AnnLit{l, falsifying.restrict_left_of(f, var_of(l))});
  }
  return canonical_ann_clause(std::move(out));
}

AnnClause axiom_expres(const Qbf& f, int clause_index,
                       const Annotation& tau_full) {
  if (clause_index < 1 || clause_index > f.clause_count())
    throw std::out_of_range("clause index out of range");
  const Clause& c = f.clause(clause_index - 1);

  for (int u : f.universals())
    if (!tau_full.value_of(u))
      throw rule_error("assignment must cover every universal, missing " +
                       std::to_string(u));
  for (Lit l : c)
    if (f.universal(var_of(l)) && !tau_full.falsifies_literal(l))
      throw rule_error("assignment does not falsify universal literal " +
                       std::to_string(l));

  AnnClause out;
  for (Lit l : c) {
    if (f.universal(var_of(l))) continue;
    out.push_back(AnnLit{l, tau_full.restrict_left_of(f, var_of(l))});
  }
  return canonical_ann_clause(std::move(out));
}

AnnClause instantiate(const Qbf& f, const Annotation& sigma,
                      const AnnClause& c) {
  for (const Annotation::Entry& e : sigma.entries())
    if (!f.universal(e.var))
      throw rule_error("instantiation assigns non-universal variable " +
                       std::to_string(e.var));
  AnnClause out;
  out.reserve(c.size());
  for (const AnnLit& al : c)
    out.push_back(
        AnnLit{al.lit, al.ann.complete_with(f, sigma, var_of(al.lit))});
  return canonical_ann_clause(std::move(out));
}

AnnClause resolve_annotated(const AnnClause& c1, const AnnClause& c2,
                            const AnnLit& pivot) {
  AnnLit complement{-pivot.lit, pivot.ann};
  if (!ann_clause_contains(c1, pivot))
    throw rule_error("pivot " + ann_lit_to_string(pivot) +
                     " not in first premise");
  if (!ann_clause_contains(c2, complement))
    throw rule_error("pivot complement " + ann_lit_to_string(complement) +
                     " not in second premise");
  AnnClause out;
  for (const AnnLit& al : c1)
    if (!(al == pivot)) out.push_back(al);
  for (const AnnLit& al : c2)
    if (!(al == complement)) out.push_back(al);
  return canonical_ann_clause(std::move(out));
}

namespace {

bool has_complementary_pair(const AnnClause& c) {
  for (size_t i = 0; i + 1 < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (var_of(c[i].lit) == var_of(c[j].lit) && c[i].lit == -c[j].lit)
        return true;
  return false;
}

}  // namespace

ExpansionVerdict check_expansion_proof(const Qbf& f, const ExpansionProof& p) {
  ExpansionVerdict verdict;
  std::map<int, const ExpansionStep*> by_id;

  auto invalid = [&](const ExpansionStep& s, const std::string& why) {
    verdict.valid = false;
    verdict.failed_step = s.id;
    verdict.reason = why;
    return verdict;
  };

  for (const ExpansionStep& s : p.steps) {
    if (by_id.count(s.id)) return invalid(s, "duplicate step id");
    AnnClause derived;
    try {
      switch (s.kind) {
        case ExpansionStep::Kind::Axiom:
          if (p.calculus == Calculus::IrCalc) {
            if (s.full_assignment)
              return invalid(s, "axiom carries a total assignment");
            derived = axiom_ircalc(f, s.input_clause);
          } else {
            if (!s.full_assignment)
              return invalid(s, "axiom lacks its total assignment");
            derived = axiom_expres(f, s.input_clause, *s.full_assignment);
          }
          break;
        case ExpansionStep::Kind::Inst: {
          if (p.calculus == Calculus::ExpRes)
            return invalid(s, "instantiation step in a resolution-only proof");
          auto it = by_id.find(s.parent);
          if (it == by_id.end() || s.parent >= s.id)
            return invalid(s, "parent must precede the step");
          derived = instantiate(f, s.sigma, it->second->result);
          break;
        }
        case ExpansionStep::Kind::Res: {
          auto i1 = by_id.find(s.parent);
          auto i2 = by_id.find(s.parent2);
          if (i1 == by_id.end() || i2 == by_id.end() || s.parent >= s.id ||
              s.parent2 >= s.id)
            return invalid(s, "parents must precede the step");
          derived =
              resolve_annotated(i1->second->result, i2->second->result, s.pivot);
          break;
        }
      }
    } catch (const std::exception& e) {
      return invalid(s, e.what());
    }
    if (!(canonical_ann_clause(s.result) == derived))
      return invalid(s, "stated result differs from derived clause " +
                            ann_clause_to_string(derived));
    if (has_complementary_pair(derived))
      verdict.warnings.push_back("step " + std::to_string(s.id) +
                                 " derives a clause with complementary "
                                 "base literals");
    by_id[s.id] = &s;
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Text format.

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

long parse_int(const std::string& tok, int line) {
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

Annotation parse_annotation_body(const std::string& body, const Qbf& f,
                                 int line) {
  Annotation ann;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw parse_error(line, "empty annotation entry");
    long v = parse_int(cur, line);
    if (v == 0 || !f.declared(static_cast<int>(std::labs(v))))
      throw parse_error(line, "annotation references undeclared variable");
    try {
      ann.set(f, static_cast<int>(std::labs(v)), v > 0);
    } catch (const rule_error& e) {
      throw parse_error(line, e.what());
    }
    cur.clear();
  };
  for (char ch : body) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  return ann;
}

AnnLit parse_ann_lit(const std::string& tok, const Qbf& f, int line) {
  size_t caret = tok.find('^');
  std::string lit_part = tok.substr(0, caret);
  long lit = parse_int(lit_part, line);
  if (lit == 0) throw parse_error(line, "literal must be nonzero");
  AnnLit out{static_cast<Lit>(lit), {}};
  if (caret != std::string::npos) {
    std::string rest = tok.substr(caret + 1);
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
      throw parse_error(line, "malformed annotation in '" + tok + "'");
    out.ann =
        parse_annotation_body(rest.substr(1, rest.size() - 2), f, line);
  }
  if (!f.declared(var_of(out.lit)))
    throw parse_error(line, "literal references undeclared variable");
  return out;
}

std::string ann_token(const AnnLit& al) {
  std::string out = std::to_string(al.lit);
  if (!al.ann.empty()) {
    out += "^{";
    const auto& entries = al.ann.entries();
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries[i].value ? entries[i].var
                                             : -entries[i].var);
    }
    out += '}';
  }
  return out;
}

}  // namespace

ExpansionProof parse_expansion_proof(std::istream& in, const Qbf& f) {
  ExpansionProof proof;
  bool saw_calculus = false;
  std::string line;
  int lineno = 0;
  int last_id = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") {
      if (toks.size() >= 3 && toks[1] == "calculus") {
        if (saw_calculus) throw parse_error(lineno, "duplicate calculus line");
        if (toks[2] == "ircalc")
          proof.calculus = Calculus::IrCalc;
        else if (toks[2] == "expres")
          proof.calculus = Calculus::ExpRes;
        else
          throw parse_error(lineno, "unknown calculus '" + toks[2] + "'");
        saw_calculus = true;
      }
      continue;
    }
    if (toks[0] != "s") throw parse_error(lineno, "expected step line");
    if (!saw_calculus)
      throw parse_error(lineno, "missing 'c calculus' header line");
    if (toks.size() < 4) throw parse_error(lineno, "truncated step");
    if (toks.back() != "0")
      throw parse_error(lineno, "step line must end with 0");

    ExpansionStep step;
    step.id = static_cast<int>(parse_int(toks[1], lineno));
    if (step.id <= last_id)
      throw parse_error(lineno, "step ids must be strictly increasing");
    last_id = step.id;

    const std::string& kind = toks[2];
    size_t pos = 3;
    size_t end = toks.size() - 1;  // exclusive of the terminating 0

    auto bar = std::find(toks.begin() + pos, toks.begin() + end, "|");
    if (kind == "a") {
      step.kind = ExpansionStep::Kind::Axiom;
      step.input_clause = static_cast<int>(parse_int(toks[pos++], lineno));
      if (step.input_clause < 1 || step.input_clause > f.clause_count())
        throw parse_error(lineno, "axiom clause index out of range");
      if (bar != toks.begin() + end) {
        Annotation full;
        for (auto it = toks.begin() + pos; it != bar; ++it) {
          long v = parse_int(*it, lineno);
          if (v == 0 || !f.declared(static_cast<int>(std::labs(v))))
            throw parse_error(lineno, "bad assignment literal");
          try {
            full.set(f, static_cast<int>(std::labs(v)), v > 0);
          } catch (const rule_error& e) {
            throw parse_error(lineno, e.what());
          }
        }
        step.full_assignment = std::move(full);
        pos = static_cast<size_t>(bar - toks.begin()) + 1;
      }
    } else if (kind == "i") {
      step.kind = ExpansionStep::Kind::Inst;
      step.parent = static_cast<int>(parse_int(toks[pos++], lineno));
      if (bar == toks.begin() + end)
        throw parse_error(lineno, "instantiation step lacks '|'");
      for (auto it = toks.begin() + pos; it != bar; ++it) {
        long v = parse_int(*it, lineno);
        if (v == 0 || !f.declared(static_cast<int>(std::labs(v))))
          throw parse_error(lineno, "bad assignment literal");
        try {
          step.sigma.set(f, static_cast<int>(std::labs(v)), v > 0);
        } catch (const rule_error& e) {
          throw parse_error(lineno, e.what());
        }
      }
      pos = static_cast<size_t>(bar - toks.begin()) + 1;
    } else if (kind == "r") {
      step.kind = ExpansionStep::Kind::Res;
      step.parent = static_cast<int>(parse_int(toks[pos++], lineno));
      step.parent2 = static_cast<int>(parse_int(toks[pos++], lineno));
      if (pos >= end) throw parse_error(lineno, "resolution step lacks pivot");
      step.pivot = parse_ann_lit(toks[pos++], f, lineno);
    } else {
      throw parse_error(lineno, "unknown step kind '" + kind + "'");
    }

    for (; pos < end; ++pos)
      step.result.push_back(parse_ann_lit(toks[pos], f, lineno));
    step.result = canonical_ann_clause(std::move(step.result));
    proof.steps.push_back(std::move(step));
  }
  if (!saw_calculus) throw parse_error(lineno, "missing 'c calculus' line");
  return proof;
}

ExpansionProof parse_expansion_proof_string(const std::string& text,
                                            const Qbf& f) {
  std::istringstream in(text);
  return parse_expansion_proof(in, f);
}

ExpansionProof parse_expansion_proof_file(const std::string& path,
                                          const Qbf& f) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_expansion_proof(in, f);
}

void emit_expansion_proof(const ExpansionProof& p, std::ostream& out) {
  out << "c calculus "
      << (p.calculus == Calculus::IrCalc ? "ircalc" : "expres") << '\n';
  for (const ExpansionStep& s : p.steps) {
    out << "s " << s.id << ' ';
    switch (s.kind) {
      case ExpansionStep::Kind::Axiom:
        out << "a " << s.input_clause;
        if (s.full_assignment) {
          for (const Annotation::Entry& e : s.full_assignment->entries())
            out << ' ' << (e.value ? e.var : -e.var);
          out << " |";
        }
        break;
      case ExpansionStep::Kind::Inst:
        out << "i " << s.parent;
        for (const Annotation::Entry& e : s.sigma.entries())
          out << ' ' << (e.value ? e.var : -e.var);
        out << " |";
        break;
      case ExpansionStep::Kind::Res:
        out << "r " << s.parent << ' ' << s.parent2 << ' '
            << ann_token(s.pivot);
        break;
    }
    for (const AnnLit& al : s.result) out << ' ' << ann_token(al);
    out << " 0\n";
  }
}

std::string emit_expansion_proof_string(const ExpansionProof& p) {
  std::ostringstream out;
  emit_expansion_proof(p, out);
  return out.str();
}

}  // namespace qproof
