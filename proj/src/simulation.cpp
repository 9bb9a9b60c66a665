#include "qproof/simulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qproof/prop.hpp"

namespace qproof {

namespace {

// The pair of clauses binding a fresh annotated variable to its base:
// to_base = (-fresh v base), from_base = (fresh v -base).
struct DefPair {
  int fresh = 0;
  int base = 0;
  bool to_base_marked = false;
  bool from_base_marked = false;

  Clause to_base() const { return canonical_clause({-fresh, base}); }
  Clause from_base() const { return canonical_clause({fresh, -base}); }
};

struct Ctx {
  const Qbf& input;
  const ExpansionProof& proof;
  Qbf work;
  VarTable table;
  QratProof out;
  std::vector<int> def_order;    // fresh ids with pass-one definitions
  std::map<int, DefPair> defs;   // fresh id -> pair
  int next_def_label = 1;

  explicit Ctx(const Qbf& f, const ExpansionProof& p)
      : input(f), proof(p), work(f) {
    for (int i = 0; i < work.clause_count(); ++i)
      work.set_label(i, "C" + std::to_string(i + 1) + "''");
  }
};

void require_valid(const Qbf& f, const ExpansionProof& p, Calculus expected) {
  if (p.calculus != expected)
    throw std::invalid_argument("proof is for the other calculus");
  ExpansionVerdict v = check_expansion_proof(f, p);
  if (!v.valid)
    throw std::invalid_argument("input proof invalid at step " +
                                std::to_string(v.failed_step) + ": " +
                                v.reason);
  if (!p.is_refutation())
    throw std::invalid_argument(
        "input proof does not derive the empty clause");
}

void emit_add(Ctx& ctx, const std::vector<Lit>& lits,
              const std::string& label = "") {
  ctx.out.steps.push_back(QratStep::add(lits));
  ctx.work.add_clause(lits, label);
}

void emit_delete(Ctx& ctx, const Clause& c) {
  int idx = ctx.work.find_clause(c);
  if (idx < 0)
    throw std::logic_error("internal: deleting absent clause " +
                           clause_to_string(c));
  ctx.out.steps.push_back(QratStep::del(c));
  ctx.work.remove_clause(idx);
}

void emit_drop(Ctx& ctx, int clause_idx, Lit ulit) {
  Clause remainder;
  for (Lit l : ctx.work.clause(clause_idx))
    if (l != ulit) remainder.push_back(l);
  ctx.out.steps.push_back(
      QratStep::drop(ulit, remainder, QratStep::Hint::Eur));
  ctx.work.set_clause(clause_idx, remainder);
}

// Declares base^tau, adds both definition clauses (fresh literal first, it
// carries the pivot), and registers the pair.
int introduce_definition_pair(Ctx& ctx, int base, const Annotation& tau) {
  int fresh = ctx.table.intern(ctx.work, base, tau);
  ctx.out.steps.push_back(QratStep::declare(fresh, base));
  DefPair pair;
  pair.fresh = fresh;
  pair.base = base;
  emit_add(ctx, {-fresh, base}, "D" + std::to_string(ctx.next_def_label++));
  emit_add(ctx, {fresh, -base}, "D" + std::to_string(ctx.next_def_label++));
  ctx.defs[fresh] = pair;
  ctx.def_order.push_back(fresh);
  return fresh;
}

// Pass-one definitions: one pair per annotated variable of the axiom steps,
// in proof order.
void introduce_definitions(Ctx& ctx) {
  for (const ExpansionStep& s : ctx.proof.steps) {
    if (s.kind != ExpansionStep::Kind::Axiom) continue;
    for (const AnnLit& al : s.result) {
      if (al.ann.empty()) continue;
      if (ctx.table.lookup(var_of(al.lit), al.ann)) continue;
      introduce_definition_pair(ctx, var_of(al.lit), al.ann);
    }
  }
}

// One clause per axiom step: the grounded annotated clause together with
// the universal literals of its input clause. Implied by propagation
// against the definitions plus the original clause.
void introduce_annotated_clauses(Ctx& ctx) {
  for (const ExpansionStep& s : ctx.proof.steps) {
    if (s.kind != ExpansionStep::Kind::Axiom) continue;
    Clause ground = ctx.table.ground_clause(ctx.work, s.result);
    for (Lit l : ctx.input.clause(s.input_clause - 1))
      if (ctx.input.universal(var_of(l))) ground.push_back(l);
    ground = canonical_clause(std::move(ground));
    if (!is_asymmetric_tautology(ctx.work.matrix(), ground))
      throw std::logic_error(
          "internal: annotated clause is not propagation-implied: " +
          clause_to_string(ground));
    emit_add(ctx, ground, "C" + std::to_string(s.id) + "'");
  }
}

void delete_input_clauses(Ctx& ctx) {
  for (const Clause& c : ctx.input.matrix()) emit_delete(ctx, c);
}

void delete_all_definitions(Ctx& ctx) {
  for (int fresh : ctx.def_order) {
    emit_delete(ctx, ctx.defs[fresh].to_base());
    emit_delete(ctx, ctx.defs[fresh].from_base());
  }
}

// Universal variables right to left in the extended prefix; within a block,
// reverse declaration order.
std::vector<int> universals_right_to_left(const Qbf& f) {
  std::vector<int> order;
  for (int b = f.block_count(); b >= 1; --b) {
    const Block& blk = f.block(b);
    if (blk.quant != Quant::Forall) continue;
    for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it)
      order.push_back(*it);
  }
  return order;
}

// verify=true re-checks each drop against the dependency scheme and fails
// loudly on violation; pass-two drops rely on the blocking-path scan.
void drop_universal_literals(Ctx& ctx, bool verify) {
  for (int v : universals_right_to_left(ctx.work)) {
    for (int ci = 0; ci < ctx.work.clause_count(); ++ci) {
      Lit present = 0;
      for (Lit cand : {v, -v})
        if (clause_contains(ctx.work.clause(ci), cand)) present = cand;
      if (present == 0) continue;
      if (verify && !eur_droppable(ctx.work, ctx.work.clause(ci), present))
        throw std::logic_error(
            "internal: universal drop rejected, a dependency survived the "
            "scaffold for variable " +
            std::to_string(v));
      emit_drop(ctx, ci, present);
    }
  }
}

void replay_resolution(Ctx& ctx, const ExpansionStep& s) {
  Clause ground = ctx.table.ground_clause(ctx.work, s.result);
  if (!is_asymmetric_tautology(ctx.work.matrix(), ground))
    throw std::logic_error("internal: resolvent not propagation-implied: " +
                           clause_to_string(ground));
  emit_add(ctx, ground);
}

// Lowers one instantiation step: fresh targets get declarations and both
// definition clauses first, then the instantiated clause goes in as a
// single propagation-implied addition.
void emit_instantiation_chain(Ctx& ctx, const ExpansionStep& s) {
  for (const AnnLit& al : s.result) {
    if (al.ann.empty()) continue;
    if (ctx.table.lookup(var_of(al.lit), al.ann)) continue;
    introduce_definition_pair(ctx, var_of(al.lit), al.ann);
  }
  Clause ground = ctx.table.ground_clause(ctx.work, s.result);
  if (!is_asymmetric_tautology(ctx.work.matrix(), ground))
    throw std::logic_error(
        "internal: instantiated clause is not propagation-implied; a "
        "required definition clause is missing: " +
        clause_to_string(ground));
  emit_add(ctx, ground);
}

void finish_refutation(Ctx& ctx) {
  if (!ctx.proof.is_refutation() || ctx.out.adds_empty_clause()) return;
  // The empty clause arose from drops alone; state it explicitly.
  if (!is_asymmetric_tautology(ctx.work.matrix(), Clause{}))
    throw std::logic_error("internal: final state does not conflict");
  emit_add(ctx, {});
}

}  // namespace

ExpResTranslation translate_expres_to_qrat(const Qbf& f,
                                           const ExpansionProof& p) {
  require_valid(f, p, Calculus::ExpRes);
  Ctx ctx(f, p);

  introduce_definitions(ctx);
  introduce_annotated_clauses(ctx);
  delete_input_clauses(ctx);
  delete_all_definitions(ctx);
  Qbf scaffold = ctx.work;
  drop_universal_literals(ctx, /*verify=*/true);
  for (const ExpansionStep& s : p.steps)
    if (s.kind == ExpansionStep::Kind::Res) replay_resolution(ctx, s);
  finish_refutation(ctx);

  return ExpResTranslation{std::move(ctx.out), std::move(scaffold),
                           std::move(ctx.table)};
}

namespace {

struct AnnKey {
  int base;
  Annotation ann;
  bool operator<(const AnnKey& o) const {
    if (base != o.base) return base < o.base;
    return compare_annotations(ann, o.ann) < 0;
  }
};

// Records which pass-one definition clauses later instantiation steps rely
// on. For a changed literal s*x^tau -> s*x^tau' the propagation chain runs
// through the clause of x^tau containing the complement of the old literal
// and the clause of x^tau' containing the new literal; only sides of
// pass-one pairs are recorded, lazily created variables bring both their
// clauses along anyway.
void mark_important_definitions(Ctx& ctx) {
  std::set<AnnKey> seen;
  for (const ExpansionStep& s : ctx.proof.steps)
    if (s.kind == ExpansionStep::Kind::Axiom)
      for (const AnnLit& al : s.result)
        if (!al.ann.empty()) seen.insert(AnnKey{var_of(al.lit), al.ann});

  auto mark = [&ctx](int base, const Annotation& ann, bool to_base_side) {
    int id = ctx.table.lookup(base, ann);
    if (id == 0) return;
    auto it = ctx.defs.find(id);
    if (it == ctx.defs.end()) return;
    if (to_base_side)
      it->second.to_base_marked = true;
    else
      it->second.from_base_marked = true;
  };

  for (const ExpansionStep& s : ctx.proof.steps) {
    if (s.kind == ExpansionStep::Kind::Inst) {
      const ExpansionStep* parent = ctx.proof.step_with_id(s.parent);
      for (const AnnLit& al : parent->result) {
        int base = var_of(al.lit);
        Annotation target = al.ann.complete_with(ctx.work, s.sigma, base);
        if (target == al.ann) continue;  // annotation unchanged
        bool positive_lit = al.lit > 0;
        // Old-side clause: the one containing the complement of s*x^tau.
        if (!al.ann.empty()) mark(base, al.ann, /*to_base_side=*/positive_lit);
        // New-side clause, only when the target variable predates this step.
        if (seen.count(AnnKey{base, target}))
          mark(base, target, /*to_base_side=*/!positive_lit);
      }
    }
    for (const AnnLit& al : s.result)
      if (!al.ann.empty()) seen.insert(AnnKey{var_of(al.lit), al.ann});
  }
}

}  // namespace

IrcalcTranslation translate_ircalc_to_qrat(const Qbf& f,
                                           const ExpansionProof& p) {
  require_valid(f, p, Calculus::IrCalc);
  Ctx ctx(f, p);
  IrcalcTranslation result;

  // Pass one.
  introduce_definitions(ctx);
  introduce_annotated_clauses(ctx);
  delete_input_clauses(ctx);
  mark_important_definitions(ctx);

  // Drop the unmarked definitions, then relabel the retained ones in order.
  for (int fresh : ctx.def_order) {
    const DefPair& pair = ctx.defs[fresh];
    if (!pair.to_base_marked) emit_delete(ctx, pair.to_base());
    if (!pair.from_base_marked) emit_delete(ctx, pair.from_base());
  }
  int next = 1;
  for (int fresh : ctx.def_order) {
    const DefPair& pair = ctx.defs[fresh];
    for (bool to_base_side : {true, false}) {
      if (!(to_base_side ? pair.to_base_marked : pair.from_base_marked))
        continue;
      Clause c = to_base_side ? pair.to_base() : pair.from_base();
      int idx = ctx.work.find_clause(c);
      if (idx >= 0) ctx.work.set_label(idx, "D" + std::to_string(next));
      ++next;
      result.important_definitions.push_back(std::move(c));
    }
  }
  ctx.next_def_label = next;

  result.halt_state = ctx.work;

  // A universal whose two polarities are still linked by a resolution path
  // cannot be dropped later; halt with the witness.
  for (int v : universals_right_to_left(ctx.work)) {
    std::optional<ResolutionPath> path = find_blocking_path(ctx.work, v);
    if (!path) continue;
    PathCheck check = validate_blocking_path(ctx.work, *path, v);
    if (!check.ok)
      throw std::logic_error("internal: invalid witness path: " +
                             check.reason);
    BlockedWitness w;
    w.universal = v;
    w.path = std::move(*path);
    for (int ci : w.path.clause_indices) {
      const std::string& label = ctx.work.label(ci);
      w.labels.push_back(label.empty() ? "#" + std::to_string(ci + 1)
                                       : label);
      w.clauses.push_back(ctx.work.clause(ci));
    }
    result.blocked = true;
    result.witness = std::move(w);
    result.proof = std::move(ctx.out);  // partial script, for inspection
    result.table = std::move(ctx.table);
    return result;
  }

  // Pass two.
  drop_universal_literals(ctx, /*verify=*/false);
  for (const ExpansionStep& s : p.steps) {
    if (s.kind == ExpansionStep::Kind::Res)
      replay_resolution(ctx, s);
    else if (s.kind == ExpansionStep::Kind::Inst)
      emit_instantiation_chain(ctx, s);
  }
  finish_refutation(ctx);

  result.proof = std::move(ctx.out);
  result.table = std::move(ctx.table);
  return result;
}

std::string blocked_report(const BlockedWitness& w) {
  std::ostringstream out;
  out << "RESULT: BLOCKED u=" << w.universal << '\n';
  out << "path: ";
  for (size_t i = 0; i < w.labels.size(); ++i) {
    if (i) out << ',';
    out << w.labels[i];
  }
  out << '\n';
  return out.str();
}

}  // namespace qproof
