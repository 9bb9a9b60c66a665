#include "qproof/prop.hpp"

#include <algorithm>

namespace qproof {

namespace {

// Literal -> dense index for occurrence lists.
inline size_t lit_index(Lit l) {
  return static_cast<size_t>(2 * var_of(l) + (l < 0 ? 1 : 0));
}

}  // namespace

PropagationResult unit_propagate(std::span<const Clause> matrix,
                                 std::span<const Lit> assumptions) {
  PropagationResult res;
  int max_var = 0;
  for (const Clause& c : matrix)
    for (Lit l : c) max_var = std::max(max_var, var_of(l));
  for (Lit l : assumptions) max_var = std::max(max_var, var_of(l));
  res.values.assign(max_var + 1, -1);

  // assign() returns false on conflict with an existing assignment.
  auto assign = [&res](Lit l, int reason) {
    int8_t want = l > 0 ? 1 : 0;
    int8_t& slot = res.values[var_of(l)];
    if (slot == want) return true;
    if (slot >= 0) return false;
    slot = want;
    res.trail.push_back({l, reason});
    return true;
  };

  for (Lit l : assumptions) {
    if (!assign(l, -1)) {
      res.outcome = PropOutcome::Conflict;
      return res;
    }
  }

  std::vector<std::vector<int>> occ(2 * (max_var + 1) + 2);
  std::vector<char> satisfied(matrix.size(), 0);
  for (size_t ci = 0; ci < matrix.size(); ++ci)
    for (Lit l : matrix[ci]) occ[lit_index(l)].push_back(static_cast<int>(ci));

  // Rescans clause ci under the current assignment; returns false on conflict.
  auto update_clause = [&](int ci) {
    if (satisfied[ci]) return true;
    const Clause& c = matrix[ci];
    int falsified = 0;
    Lit unit = 0;
    for (Lit l : c) {
      int8_t v = res.values[var_of(l)];
      if (v < 0) {
        if (unit == 0) unit = l;
      } else if (v == (l > 0 ? 1 : 0)) {
        satisfied[ci] = 1;
        return true;
      } else {
        ++falsified;
      }
    }
    if (falsified == static_cast<int>(c.size())) return false;  // conflict
    if (unit != 0 && falsified == static_cast<int>(c.size()) - 1) {
      if (!assign(unit, ci)) return false;
      satisfied[ci] = 1;
    }
    return true;
  };

  // Seed: every clause may already be unit or empty.
  for (size_t ci = 0; ci < matrix.size(); ++ci) {
    if (!update_clause(static_cast<int>(ci))) {
      res.outcome = PropOutcome::Conflict;
      return res;
    }
  }

  for (size_t qhead = 0; qhead < res.trail.size(); ++qhead) {
    Lit assigned_lit = res.trail[qhead].first;
    // Clauses containing the complement may have become unit or empty.
    for (int ci : occ[lit_index(-assigned_lit)]) {
      if (!update_clause(ci)) {
        res.outcome = PropOutcome::Conflict;
        return res;
      }
    }
  }
  res.outcome = PropOutcome::Fixpoint;
  return res;
}

bool is_asymmetric_tautology(std::span<const Clause> matrix, const Clause& c) {
  std::vector<Lit> assumptions;
  assumptions.reserve(c.size());
  for (Lit l : c) assumptions.push_back(-l);
  return unit_propagate(matrix, assumptions).outcome == PropOutcome::Conflict;
}

Clause outer_resolvent(const Qbf& f, const Clause& c, const Clause& d,
                       Lit pivot) {
  if (!clause_contains(c, pivot))
    throw rule_error("outer resolvent: pivot not in first clause");
  if (!clause_contains(d, -pivot))
    throw rule_error("outer resolvent: complement not in second clause");
  Clause out;
  for (Lit l : c)
    if (l != pivot) out.push_back(l);
  for (Lit l : d)
    if (l != -pivot && f.left_of(var_of(l), var_of(pivot))) out.push_back(l);
  return canonical_clause(std::move(out));
}

bool is_qrat_clause(const Qbf& f, const Clause& c, Lit pivot) {
  if (!clause_contains(c, pivot))
    throw rule_error("qrat check: pivot not in clause");
  const std::vector<Clause>& matrix = f.matrix();
  for (const Clause& d : matrix) {
    if (!clause_contains(d, -pivot)) continue;
    if (!is_asymmetric_tautology(matrix, outer_resolvent(f, c, d, pivot)))
      return false;
  }
  return true;
}

}  // namespace qproof
