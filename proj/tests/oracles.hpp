#ifndef QPROOF_TESTS_ORACLES_HPP_
#define QPROOF_TESTS_ORACLES_HPP_

// Reference implementations for the test suite. Everything here is written
// independently of the library's algorithms: full truth tables, exhaustive
// game evaluation, plain sequence enumeration, and a from-scratch replay of
// the clausal-script rules. Deliberately naive.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "qproof/dependency.hpp"
#include "qproof/expansion.hpp"
#include "qproof/qbf.hpp"
#include "qproof/qrat.hpp"

namespace oracles {

using qproof::AnnClause;
using qproof::AnnLit;
using qproof::Annotation;
using qproof::Clause;
using qproof::Lit;
using qproof::Qbf;
using qproof::Quant;
using qproof::var_of;

// ---------------------------------------------------------------------------
// Truth tables (propositional, up to ~20 variables).

inline std::vector<int> collect_vars(const std::vector<Clause>& matrix,
                                     const Clause& extra = {}) {
  std::set<int> vars;
  for (const Clause& c : matrix)
    for (Lit l : c) vars.insert(var_of(l));
  for (Lit l : extra) vars.insert(var_of(l));
  return {vars.begin(), vars.end()};
}

inline bool assignment_satisfies(const std::map<int, bool>& a,
                                 const Clause& c) {
  for (Lit l : c) {
    auto it = a.find(var_of(l));
    if (it != a.end() && it->second == (l > 0)) return true;
  }
  return false;
}

/// Every total model of `matrix` satisfies `c`.
inline bool tt_entails(const std::vector<Clause>& matrix, const Clause& c) {
  std::vector<int> vars = collect_vars(matrix, c);
  if (vars.size() > 22) throw std::logic_error("truth table too large");
  uint64_t count = uint64_t{1} << vars.size();
  for (uint64_t mask = 0; mask < count; ++mask) {
    std::map<int, bool> a;
    for (size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (mask >> i) & 1;
    bool model = true;
    for (const Clause& cl : matrix)
      if (!assignment_satisfies(a, cl)) {
        model = false;
        break;
      }
    if (model && !assignment_satisfies(a, c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exhaustive two-player game evaluation of a QBF.

namespace detail {

struct GameEval {
  const Qbf& f;
  std::vector<std::pair<int, Quant>> order;  // prefix order
  std::vector<int> false_lits;               // per clause
  std::vector<int> sat_count;                // per clause, satisfying lits
  int unsatisfied;                           // clauses with sat_count == 0
  bool falsified;

  explicit GameEval(const Qbf& f_) : f(f_) {
    for (int b = 1; b <= f.block_count(); ++b)
      for (int v : f.block(b).vars) order.push_back({v, f.block(b).quant});
    false_lits.assign(f.clause_count(), 0);
    sat_count.assign(f.clause_count(), 0);
    unsatisfied = f.clause_count();
    falsified = false;
    for (int i = 0; i < f.clause_count(); ++i)
      if (f.clause(i).empty()) falsified = true;
  }

  // touched codes: 2*ci+1 when the touch satisfied clause ci, 2*ci when it
  // falsified one of its literals.
  void assign(int var, bool value, std::vector<int>& touched) {
    for (int ci = 0; ci < f.clause_count(); ++ci) {
      for (Lit l : f.clause(ci)) {
        if (var_of(l) != var) continue;
        bool satisfies = (l > 0) == value;
        touched.push_back(ci * 2 + (satisfies ? 1 : 0));
        if (satisfies) {
          if (sat_count[ci]++ == 0) --unsatisfied;
        } else {
          if (++false_lits[ci] == static_cast<int>(f.clause(ci).size()) &&
              sat_count[ci] == 0)
            falsified = true;
        }
      }
    }
  }

  void unassign(const std::vector<int>& touched) {
    for (int code : touched) {
      int ci = code / 2;
      if (code % 2) {
        if (--sat_count[ci] == 0) ++unsatisfied;
      } else {
        --false_lits[ci];
      }
    }
  }

  bool play(size_t depth) {
    if (falsified) return false;
    if (unsatisfied == 0) return true;
    if (depth == order.size()) return unsatisfied == 0;
    auto [var, quant] = order[depth];
    bool result = quant == Quant::Forall;
    for (bool value : {false, true}) {
      std::vector<int> touched;
      bool saved_falsified = falsified;
      assign(var, value, touched);
      bool sub = play(depth + 1);
      unassign(touched);
      falsified = saved_falsified;
      if (quant == Quant::Forall)
        result = result && sub;
      else
        result = result || sub;
      if (quant == Quant::Forall && !result) return false;
      if (quant == Quant::Exists && result) return true;
    }
    return result;
  }
};

}  // namespace detail

inline bool qbf_is_true(const Qbf& f) {
  detail::GameEval game(f);
  return game.play(0);
}

// ---------------------------------------------------------------------------
// Plain enumeration of clause sequences for the path search.

namespace detail {

inline bool extend_path(const Qbf& f, Lit target, int source_block,
                        int current_clause, int entered_var, int remaining) {
  const Clause& c = f.clause(current_clause);
  if (var_of(target) != entered_var &&
      std::find(c.begin(), c.end(), target) != c.end())
    return true;
  if (remaining == 0) return false;
  for (Lit l : c) {
    int v = var_of(l);
    if (!f.existential(v) || f.block_of(v) <= source_block ||
        v == entered_var)
      continue;
    for (int cj = 0; cj < f.clause_count(); ++cj) {
      const Clause& next = f.clause(cj);
      if (std::find(next.begin(), next.end(), -l) == next.end()) continue;
      if (extend_path(f, target, source_block, cj, v, remaining - 1))
        return true;
    }
  }
  return false;
}

}  // namespace detail

/// Any clause sequence of length <= max_clauses witnessing a path u ~> e.
inline bool brute_path_exists(const Qbf& f, Lit u, Lit e, int max_clauses) {
  int source_block = f.block_of(var_of(u));
  for (int ci = 0; ci < f.clause_count(); ++ci) {
    const Clause& c = f.clause(ci);
    if (std::find(c.begin(), c.end(), u) == c.end()) continue;
    if (detail::extend_path(f, e, source_block, ci, 0, max_clauses - 1))
      return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// From-scratch replay of the clausal-script rules.

namespace detail {

inline bool naive_conflicts(const std::vector<Clause>& matrix,
                            std::map<int, bool> assignment) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : matrix) {
      int unassigned = 0;
      Lit candidate = 0;
      bool satisfied = false;
      for (Lit l : c) {
        auto it = assignment.find(var_of(l));
        if (it == assignment.end()) {
          ++unassigned;
          candidate = l;
        } else if (it->second == (l > 0)) {
          satisfied = true;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return true;
      if (unassigned == 1) {
        assignment[var_of(candidate)] = candidate > 0;
        changed = true;
      }
    }
  }
  return false;
}

inline bool naive_at(const std::vector<Clause>& matrix, const Clause& c) {
  std::map<int, bool> assumption;
  for (Lit l : c) {
    auto it = assumption.find(var_of(l));
    bool value = l < 0;  // negation of the literal
    if (it != assumption.end() && it->second != value) return true;  // taut
    assumption[var_of(l)] = value;
  }
  return naive_conflicts(matrix, std::move(assumption));
}

struct NaivePrefix {
  std::map<int, int> block;
  std::map<int, char> quant;  // 'a' or 'e'

  explicit NaivePrefix(const Qbf& f) {
    for (int b = 1; b <= f.block_count(); ++b)
      for (int v : f.block(b).vars) {
        block[v] = b;
        quant[v] = f.block(b).quant == Quant::Forall ? 'a' : 'e';
      }
  }
  bool declared(int v) const { return block.count(v) > 0; }
};

inline bool naive_qrat_on(const NaivePrefix& prefix,
                          const std::vector<Clause>& matrix, const Clause& c,
                          Lit pivot) {
  for (const Clause& d : matrix) {
    if (std::find(d.begin(), d.end(), -pivot) == d.end()) continue;
    Clause resolvent;
    for (Lit l : c)
      if (l != pivot) resolvent.push_back(l);
    for (Lit l : d)
      if (l != -pivot &&
          prefix.block.at(var_of(l)) <= prefix.block.at(var_of(pivot)))
        resolvent.push_back(l);
    if (!naive_at(matrix, resolvent)) return false;
  }
  return true;
}

// Recursive path search over (clause, entry variable) states.
inline bool naive_path(const NaivePrefix& prefix,
                       const std::vector<Clause>& matrix, int source_block,
                       Lit from, Lit to,
                       std::set<std::pair<int, int>>& visited, int clause,
                       int entered_var) {
  const Clause& c = matrix[clause];
  if (var_of(to) != entered_var &&
      std::find(c.begin(), c.end(), to) != c.end())
    return true;
  for (Lit l : c) {
    int v = var_of(l);
    if (prefix.quant.at(v) != 'e' || prefix.block.at(v) <= source_block ||
        v == entered_var)
      continue;
    for (size_t cj = 0; cj < matrix.size(); ++cj) {
      const Clause& next = matrix[cj];
      if (std::find(next.begin(), next.end(), -l) == next.end()) continue;
      if (!visited.insert({static_cast<int>(cj), v}).second) continue;
      if (naive_path(prefix, matrix, source_block, from, to, visited,
                     static_cast<int>(cj), v))
        return true;
    }
  }
  return false;
}

inline bool naive_path_exists(const NaivePrefix& prefix,
                              const std::vector<Clause>& matrix, Lit from,
                              Lit to) {
  int source_block = prefix.block.at(var_of(from));
  std::set<std::pair<int, int>> visited;
  for (size_t ci = 0; ci < matrix.size(); ++ci) {
    const Clause& c = matrix[ci];
    if (std::find(c.begin(), c.end(), from) == c.end()) continue;
    if (naive_path(prefix, matrix, source_block, from, to, visited,
                   static_cast<int>(ci), 0))
      return true;
  }
  return false;
}

inline bool naive_depends(const NaivePrefix& prefix,
                          const std::vector<Clause>& matrix, int evar,
                          int uvar) {
  auto p = [&](Lit a, Lit b) {
    return naive_path_exists(prefix, matrix, a, b);
  };
  return (p(uvar, evar) && p(-uvar, -evar)) ||
         (p(uvar, -evar) && p(-uvar, evar));
}

inline bool naive_eur(const NaivePrefix& prefix,
                      const std::vector<Clause>& matrix, const Clause& c,
                      Lit ulit) {
  for (Lit l : c) {
    int v = var_of(l);
    if (v == var_of(ulit) || prefix.quant.at(v) != 'e') continue;
    if (prefix.block.at(v) <= prefix.block.at(var_of(ulit))) continue;
    if (naive_depends(prefix, matrix, v, var_of(ulit))) return false;
  }
  return true;
}

}  // namespace detail

/// Independent verdict on a clausal script. Returns false when any step is
/// unjustified; *refutation reports whether an empty clause was added.
inline bool naive_qrat_replay(const Qbf& f, const qproof::QratProof& p,
                              bool* refutation = nullptr) {
  detail::NaivePrefix prefix(f);
  std::vector<Clause> matrix;
  for (const Clause& c : f.matrix())
    matrix.push_back(qproof::canonical_clause(c));
  bool empty_added = false;

  for (const qproof::QratStep& s : p.steps) {
    switch (s.kind) {
      case qproof::QratStep::Kind::DeclareVar: {
        if (s.new_var <= 0 || prefix.declared(s.new_var)) return false;
        if (!prefix.declared(s.anchor) || prefix.quant.at(s.anchor) != 'e')
          return false;
        prefix.block[s.new_var] = prefix.block.at(s.anchor);
        prefix.quant[s.new_var] = 'e';
        break;
      }
      case qproof::QratStep::Kind::Add: {
        for (Lit l : s.lits)
          if (!prefix.declared(var_of(l))) return false;
        Clause c = qproof::canonical_clause(s.lits);
        bool ok = detail::naive_at(matrix, c);
        if (!ok && !s.lits.empty()) {
          Lit pivot = s.lits.front();
          if (prefix.quant.at(var_of(pivot)) == 'e')
            ok = detail::naive_qrat_on(prefix, matrix, c, pivot);
        }
        if (!ok) return false;
        if (c.empty()) empty_added = true;
        matrix.push_back(std::move(c));
        break;
      }
      case qproof::QratStep::Kind::Delete: {
        Clause c = qproof::canonical_clause(s.lits);
        auto it = std::find(matrix.begin(), matrix.end(), c);
        if (it == matrix.end()) return false;
        matrix.erase(it);
        break;
      }
      case qproof::QratStep::Kind::DropUniv: {
        if (!prefix.declared(var_of(s.drop_lit)) ||
            prefix.quant.at(var_of(s.drop_lit)) != 'a')
          return false;
        Clause full = s.lits;
        full.push_back(s.drop_lit);
        full = qproof::canonical_clause(full);
        auto it = std::find(matrix.begin(), matrix.end(), full);
        if (it == matrix.end()) return false;
        if (!detail::naive_qrat_on(prefix, matrix, full, s.drop_lit) &&
            !detail::naive_eur(prefix, matrix, full, s.drop_lit))
          return false;
        Clause reduced;
        for (Lit l : full)
          if (l != s.drop_lit) reduced.push_back(l);
        *it = qproof::canonical_clause(reduced);
        break;
      }
    }
  }
  if (refutation) *refutation = empty_added;
  return true;
}

// ---------------------------------------------------------------------------
// Independent recomputation of the expansion-calculus rules.

namespace detail {

using NaiveAnn = std::vector<std::pair<int, bool>>;  // sorted by variable
using NaiveLit = std::pair<Lit, NaiveAnn>;
using NaiveClause = std::set<NaiveLit>;

inline NaiveAnn to_naive(const Annotation& a) {
  NaiveAnn out;
  for (const Annotation::Entry& e : a.entries()) out.push_back({e.var, e.value});
  std::sort(out.begin(), out.end());
  return out;
}

inline NaiveClause to_naive(const AnnClause& c) {
  NaiveClause out;
  for (const AnnLit& al : c) out.insert({al.lit, to_naive(al.ann)});
  return out;
}

}  // namespace detail

/// Step-by-step re-derivation with separately written rule code.
inline bool naive_check_expansion(const Qbf& f, const qproof::ExpansionProof& p) {
  using detail::NaiveAnn;
  using detail::NaiveClause;
  detail::NaivePrefix prefix(f);
  std::map<int, NaiveClause> results;
  int last_id = 0;

  for (const qproof::ExpansionStep& s : p.steps) {
    if (s.id <= last_id) return false;
    last_id = s.id;
    NaiveClause derived;
    switch (s.kind) {
      case qproof::ExpansionStep::Kind::Axiom: {
        if (s.input_clause < 1 || s.input_clause > f.clause_count())
          return false;
        const Clause& c = f.clause(s.input_clause - 1);
        std::map<int, bool> falsifying;
        if (p.calculus == qproof::Calculus::ExpRes) {
          if (!s.full_assignment) return false;
          for (const Annotation::Entry& e : s.full_assignment->entries())
            falsifying[e.var] = e.value;
          for (const auto& [v, q] : prefix.quant)
            if (q == 'a' && !falsifying.count(v)) return false;
          for (Lit l : c)
            if (prefix.quant.at(var_of(l)) == 'a' &&
                falsifying.at(var_of(l)) != (l < 0))
              return false;
        } else {
          if (s.full_assignment) return false;
          for (Lit l : c)
            if (prefix.quant.at(var_of(l)) == 'a')
              falsifying[var_of(l)] = l < 0;
        }
        for (Lit l : c) {
          if (prefix.quant.at(var_of(l)) == 'a') continue;
          NaiveAnn ann;
          for (const auto& [v, value] : falsifying)
            if (prefix.block.at(v) < prefix.block.at(var_of(l)))
              ann.push_back({v, value});
          derived.insert({l, ann});
        }
        break;
      }
      case qproof::ExpansionStep::Kind::Inst: {
        if (p.calculus == qproof::Calculus::ExpRes) return false;
        auto it = results.find(s.parent);
        if (it == results.end()) return false;
        for (const auto& [lit, ann] : it->second) {
          NaiveAnn merged = ann;
          for (const Annotation::Entry& e : s.sigma.entries()) {
            if (prefix.block.at(e.var) >= prefix.block.at(var_of(lit)))
              continue;
            bool present = false;
            for (const auto& [v, value] : merged)
              if (v == e.var) present = true;
            if (!present) merged.push_back({e.var, e.value});
          }
          std::sort(merged.begin(), merged.end());
          derived.insert({lit, merged});
        }
        break;
      }
      case qproof::ExpansionStep::Kind::Res: {
        auto i1 = results.find(s.parent);
        auto i2 = results.find(s.parent2);
        if (i1 == results.end() || i2 == results.end()) return false;
        detail::NaiveLit pivot{s.pivot.lit, detail::to_naive(s.pivot.ann)};
        detail::NaiveLit complement{-s.pivot.lit, pivot.second};
        if (!i1->second.count(pivot) || !i2->second.count(complement))
          return false;
        for (const auto& nl : i1->second)
          if (!(nl == pivot)) derived.insert(nl);
        for (const auto& nl : i2->second)
          if (!(nl == complement)) derived.insert(nl);
        break;
      }
    }
    if (detail::to_naive(s.result) != derived) return false;
    results[s.id] = std::move(derived);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Seeded random instances.

inline Clause random_clause(std::mt19937& rng, const std::vector<int>& vars,
                            int max_width) {
  std::uniform_int_distribution<int> width_dist(
      1, std::min<int>(max_width, static_cast<int>(vars.size())));
  int width = width_dist(rng);
  std::vector<int> pool = vars;
  std::shuffle(pool.begin(), pool.end(), rng);
  Clause c;
  for (int i = 0; i < width; ++i) {
    std::uniform_int_distribution<int> sign(0, 1);
    c.push_back(sign(rng) ? pool[i] : -pool[i]);
  }
  return c;
}

/// Alternating-prefix QBF over variables 1..n with random quantifiers and
/// random non-tautological clauses. Every clause carries at least one
/// existential literal (all-universal clauses are trivially false input).
inline Qbf random_qbf(std::mt19937& rng, int max_universals,
                      int max_existentials, int max_clauses, int max_width) {
  std::uniform_int_distribution<int> u_dist(1, max_universals);
  std::uniform_int_distribution<int> e_dist(2, max_existentials);
  int n_univ = u_dist(rng), n_exist = e_dist(rng);
  int total = n_univ + n_exist;

  std::vector<char> quants;
  for (int i = 0; i < n_univ; ++i) quants.push_back('a');
  for (int i = 0; i < n_exist; ++i) quants.push_back('e');
  std::shuffle(quants.begin(), quants.end(), rng);

  Qbf f;
  int block = 0;
  char prev = 0;
  for (int v = 1; v <= total; ++v) {
    if (quants[v - 1] != prev) {
      block = f.add_block(quants[v - 1] == 'a' ? Quant::Forall
                                               : Quant::Exists);
      prev = quants[v - 1];
    }
    f.declare_in_block(v, block);
  }

  std::vector<int> vars;
  for (int v = 1; v <= total; ++v) vars.push_back(v);
  std::uniform_int_distribution<int> count_dist(3, max_clauses);
  int clauses = count_dist(rng);
  for (int i = 0; i < clauses; ++i) {
    Clause c;
    do {
      c = random_clause(rng, vars, max_width);
    } while (std::none_of(c.begin(), c.end(),
                          [&](Lit l) { return f.existential(var_of(l)); }));
    f.add_clause(std::move(c));
  }
  return f;
}

/// The matrix alone (quantifiers ignored) has a model.
inline bool propositionally_satisfiable(const Qbf& f) {
  std::vector<int> vars = collect_vars(f.matrix());
  if (vars.size() > 22) throw std::logic_error("truth table too large");
  uint64_t count = uint64_t{1} << vars.size();
  for (uint64_t mask = 0; mask < count; ++mask) {
    std::map<int, bool> a;
    for (size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (mask >> i) & 1;
    bool model = true;
    for (const Clause& c : f.matrix())
      if (!assignment_satisfies(a, c)) {
        model = false;
        break;
      }
    if (model) return true;
  }
  return false;
}

/// quantifier_driven additionally requires a satisfiable matrix, so the
/// falsity genuinely comes from the quantifier structure.
inline std::vector<Qbf> random_false_qbfs(uint32_t seed, int count,
                                          int max_universals = 3,
                                          int max_existentials = 5,
                                          bool quantifier_driven = false) {
  std::mt19937 rng(seed);
  std::vector<Qbf> out;
  while (static_cast<int>(out.size()) < count) {
    Qbf f = random_qbf(rng, max_universals, max_existentials, 12, 3);
    if (qbf_is_true(f)) continue;
    if (quantifier_driven && !propositionally_satisfiable(f)) continue;
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Token-level proof mutation and audited fuzzing.

/// One random single-token sign flip, line swap, or line drop.
inline std::string mutate_text(const std::string& text, std::mt19937& rng) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  if (lines.empty()) return text;

  std::uniform_int_distribution<int> kind_dist(0, 2);
  std::uniform_int_distribution<size_t> line_dist(0, lines.size() - 1);
  int kind = kind_dist(rng);

  if (kind == 0) {
    // Flip the sign of a random integer token.
    for (int attempt = 0; attempt < 16; ++attempt) {
      size_t li = line_dist(rng);
      std::vector<std::string> toks;
      std::istringstream in(lines[li]);
      std::string t;
      while (in >> t) toks.push_back(t);
      if (toks.empty()) continue;
      std::uniform_int_distribution<size_t> tok_dist(0, toks.size() - 1);
      size_t ti = tok_dist(rng);
      std::string& tok = toks[ti];
      size_t caret = tok.find('^');
      std::string head = tok.substr(0, caret == std::string::npos
                                           ? tok.size()
                                           : caret);
      try {
        size_t used = 0;
        long v = std::stol(head, &used);
        if (used != head.size() || v == 0) continue;
        tok = std::to_string(-v) +
              (caret == std::string::npos ? "" : tok.substr(caret));
      } catch (const std::exception&) {
        continue;
      }
      std::string rebuilt;
      for (size_t i = 0; i < toks.size(); ++i) {
        if (i) rebuilt += ' ';
        rebuilt += toks[i];
      }
      lines[li] = rebuilt;
      break;
    }
  } else if (kind == 1 && lines.size() >= 2) {
    size_t a = line_dist(rng), b = line_dist(rng);
    std::swap(lines[a], lines[b]);
  } else {
    lines.erase(lines.begin() + line_dist(rng));
  }

  std::string out;
  for (const std::string& l : lines) out += l + '\n';
  return out;
}

struct FuzzStats {
  int total = 0;
  int parse_rejected = 0;
  int check_rejected = 0;
  int verified = 0;
  int false_verified = 0;
};

/// Mutates a verified clausal script; every mutant the checker still accepts
/// must also pass the independent replay.
inline FuzzStats fuzz_qrat(const Qbf& f, const std::string& base_text,
                           int rounds, uint32_t seed) {
  std::mt19937 rng(seed);
  FuzzStats stats;
  for (int i = 0; i < rounds; ++i) {
    ++stats.total;
    std::string mutated = mutate_text(base_text, rng);
    qproof::QratProof proof;
    try {
      proof = qproof::parse_qrat_string(mutated);
    } catch (const qproof::parse_error&) {
      ++stats.parse_rejected;
      continue;
    }
    qproof::QratVerdict v = qproof::check_qrat_proof(f, proof);
    if (!v.verified()) {
      ++stats.check_rejected;
      continue;
    }
    ++stats.verified;
    bool refutation = false;
    bool audit_ok = naive_qrat_replay(f, proof, &refutation);
    bool claims_refutation =
        v.outcome == qproof::QratOutcome::VerifiedRefutation;
    if (!audit_ok || refutation != claims_refutation) ++stats.false_verified;
  }
  return stats;
}

/// Same, for the expansion-proof format.
inline FuzzStats fuzz_expansion(const Qbf& f, const std::string& base_text,
                                int rounds, uint32_t seed) {
  std::mt19937 rng(seed);
  FuzzStats stats;
  for (int i = 0; i < rounds; ++i) {
    ++stats.total;
    std::string mutated = mutate_text(base_text, rng);
    qproof::ExpansionProof proof;
    try {
      proof = qproof::parse_expansion_proof_string(mutated, f);
    } catch (const qproof::parse_error&) {
      ++stats.parse_rejected;
      continue;
    }
    if (!qproof::check_expansion_proof(f, proof).valid) {
      ++stats.check_rejected;
      continue;
    }
    ++stats.verified;
    if (!naive_check_expansion(f, proof)) ++stats.false_verified;
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Hand-built fixtures for the worked examples.

inline bool qbf_structurally_equal(const Qbf& a, const Qbf& b) {
  if (a.block_count() != b.block_count()) return false;
  for (int i = 1; i <= a.block_count(); ++i)
    if (a.block(i).quant != b.block(i).quant ||
        a.block(i).vars != b.block(i).vars)
      return false;
  return a.matrix() == b.matrix();
}

struct Psi4Fixture {
  Qbf f;                                     // state after dropping the
  int e2_u1, e5_u1u3, e4_u1u3, e4_u3, e2_nu1, e5_u1;  // unimportant defs
};

/// Four-block example after pass one: five annotated clauses plus the five
/// retained definitions. Fresh ids 6..11 in first-appearance order.
inline Psi4Fixture make_psi4() {
  Psi4Fixture fx;
  Qbf& f = fx.f;
  int b1 = f.add_block(Quant::Forall);
  f.declare_in_block(1, b1);
  int b2 = f.add_block(Quant::Exists);
  f.declare_in_block(2, b2);
  int b3 = f.add_block(Quant::Forall);
  f.declare_in_block(3, b3);
  int b4 = f.add_block(Quant::Exists);
  f.declare_in_block(4, b4);
  f.declare_in_block(5, b4);
  for (int v : {6, 10}) f.declare_in_block(v, b2);
  for (int v : {7, 8, 9, 11}) f.declare_in_block(v, b4);
  fx.e2_u1 = 6;
  fx.e5_u1u3 = 7;
  fx.e4_u1u3 = 8;
  fx.e4_u3 = 9;
  fx.e2_nu1 = 10;
  fx.e5_u1 = 11;
  f.add_clause({-1, -6, -3, 7}, "C1'");
  f.add_clause({-1, -3, -8}, "C2'");
  f.add_clause({2, -3, 9}, "C3'");
  f.add_clause({1, -10}, "C4'");
  f.add_clause({-1, -6, -11}, "C5'");
  f.add_clause({6, -2}, "D1");
  f.add_clause({-7, 5}, "D2");
  f.add_clause({8, -4}, "D3");
  f.add_clause({-9, 4}, "D4");
  f.add_clause({11, -5}, "D5");
  return fx;
}

struct Phi4Fixture {
  Qbf f;
  int c2_nu1, c1_u1;
};

/// Ladder counter-example after pass one: annotated clauses plus the two
/// retained definitions. Fresh ids 5 and 6.
inline Phi4Fixture make_phi4() {
  Phi4Fixture fx;
  Qbf& f = fx.f;
  int b1 = f.add_block(Quant::Exists);
  f.declare_in_block(1, b1);
  int b2 = f.add_block(Quant::Forall);
  f.declare_in_block(2, b2);
  int b3 = f.add_block(Quant::Exists);
  f.declare_in_block(3, b3);
  f.declare_in_block(4, b3);
  f.declare_in_block(5, b3);  // c2 annotated with -u1
  f.declare_in_block(6, b3);  // c1 annotated with u1
  fx.c2_nu1 = 5;
  fx.c1_u1 = 6;
  f.add_clause({2, 5}, "C1'");
  f.add_clause({-1, 3}, "C2'");
  f.add_clause({-3, -4}, "C3'");
  f.add_clause({1, 4}, "C4'");
  f.add_clause({-2, 6}, "C5'");
  f.add_clause({4, -5}, "D1");
  f.add_clause({3, -6}, "D2");
  return fx;
}

}  // namespace oracles

#endif  // QPROOF_TESTS_ORACLES_HPP_
