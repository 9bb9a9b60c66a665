#include "qproof/expres_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qproof {

namespace {

struct Record {
  Clause lits;
  int axiom = -1;          // index into the axiom table, or
  int p1 = -1, p2 = -1;    // parents plus pivot variable for resolvents
  int pivot_var = 0;
  bool active = true;
};

struct Axiom {
  AnnClause clause;
  int input_clause;  // 1-based
  Annotation tau;
};

AnnLit unground(const VarTable& table, Lit l) {
  if (const VarTable::Entry* e = table.entry_of(var_of(l)))
    return AnnLit{l < 0 ? -e->base : e->base, e->ann};
  return AnnLit{l, {}};
}

AnnClause unground_clause(const VarTable& table, const Clause& c) {
  AnnClause out;
  out.reserve(c.size());
  for (Lit l : c) out.push_back(unground(table, l));
  return canonical_ann_clause(std::move(out));
}

}  // namespace

ExpansionProof generate_expres_refutation(const Qbf& f,
                                          const OracleLimits& limits) {
  std::vector<int> universals = f.universals();
  if (universals.size() > 24) throw oracle_error("bound exceeded");

  Qbf scratch = f;
  VarTable table;
  std::vector<Axiom> axioms;
  std::vector<Record> recs;
  std::set<Clause> seen;

  // Full expansion: every total universal assignment contributes the
  // clauses it falsifies, annotated and with universal literals removed.
  uint64_t count = uint64_t{1} << universals.size();
  for (uint64_t mask = 0; mask < count; ++mask) {
    Annotation tau;
    for (size_t i = 0; i < universals.size(); ++i)
      tau.set(f, universals[i], (mask >> i) & 1);
    for (int ci = 1; ci <= f.clause_count(); ++ci) {
      bool falsifies_all = true;
      for (Lit l : f.clause(ci - 1))
        if (f.universal(var_of(l)) && !tau.falsifies_literal(l)) {
          falsifies_all = false;
          break;
        }
      if (!falsifies_all) continue;
      AnnClause ann = axiom_expres(f, ci, tau);
      Clause ground = table.ground_clause(scratch, ann);
      if (!seen.insert(ground).second) continue;
      axioms.push_back(Axiom{std::move(ann), ci, tau});
      recs.push_back(
          Record{std::move(ground), static_cast<int>(axioms.size()) - 1});
      if (axioms.size() > limits.max_expansion_clauses)
        throw oracle_error("bound exceeded");
    }
  }

  int bottom = -1;
  for (size_t i = 0; i < recs.size(); ++i)
    if (recs[i].lits.empty()) bottom = static_cast<int>(i);

  if (bottom < 0) {
    std::vector<int> vars;
    for (const Record& r : recs)
      for (Lit l : r.lits) vars.push_back(var_of(l));
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    for (int v : vars) {
      if (bottom >= 0) break;
      std::vector<int> pos, neg;
      for (size_t i = 0; i < recs.size(); ++i) {
        if (!recs[i].active) continue;
        if (clause_contains(recs[i].lits, v)) pos.push_back((int)i);
        if (clause_contains(recs[i].lits, -v)) neg.push_back((int)i);
      }
      for (int pi : pos) {
        for (int ni : neg) {
          Clause r;
          for (Lit l : recs[pi].lits)
            if (l != v) r.push_back(l);
          for (Lit l : recs[ni].lits)
            if (l != -v) r.push_back(l);
          r = canonical_clause(std::move(r));
          if (clause_is_tautology(r)) continue;
          if (!seen.insert(r).second) continue;
          bool empty = r.empty();
          recs.push_back(Record{std::move(r), -1, pi, ni, v});
          if (recs.size() > limits.max_derived_clauses)
            throw oracle_error("bound exceeded");
          if (empty) {
            bottom = static_cast<int>(recs.size()) - 1;
            break;
          }
        }
        if (bottom >= 0) break;
      }
      for (int i : pos) recs[i].active = false;
      for (int i : neg) recs[i].active = false;
    }
  }

  if (bottom < 0) throw oracle_error("formula is true");

  // Backward trace from the empty clause; creation order is topological.
  std::vector<char> used(recs.size(), 0);
  std::vector<int> stack{bottom};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (used[i]) continue;
    used[i] = 1;
    if (recs[i].p1 >= 0) {
      stack.push_back(recs[i].p1);
      stack.push_back(recs[i].p2);
    }
  }

  ExpansionProof proof;
  proof.calculus = Calculus::ExpRes;
  std::map<int, int> step_id_of;
  int next_id = 1;
  for (size_t i = 0; i < recs.size(); ++i) {
    if (!used[i]) continue;
    const Record& r = recs[i];
    ExpansionStep step;
    step.id = next_id++;
    if (r.axiom >= 0) {
      step.kind = ExpansionStep::Kind::Axiom;
      step.input_clause = axioms[r.axiom].input_clause;
      step.full_assignment = axioms[r.axiom].tau;
      step.result = axioms[r.axiom].clause;
    } else {
      step.kind = ExpansionStep::Kind::Res;
      step.parent = step_id_of.at(r.p1);
      step.parent2 = step_id_of.at(r.p2);
      step.pivot = unground(table, r.pivot_var);
      step.result = unground_clause(table, r.lits);
    }
    step_id_of[static_cast<int>(i)] = step.id;
    proof.steps.push_back(std::move(step));
  }
  return proof;
}

}  // namespace qproof
