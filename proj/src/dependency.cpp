#include "qproof/dependency.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace qproof {

namespace {

// BFS state: (clause index, variable of the connector used to enter it;
// 0 for start clauses). Clause repetition along a path is allowed, so the
// visited set is over states, not clauses.
struct Search {
  const Qbf& f;
  int source_block;
  std::map<Lit, std::vector<int>> occ;

  explicit Search(const Qbf& f_, int source_var) : f(f_) {
    source_block = f.block_of(source_var);
    for (int ci = 0; ci < f.clause_count(); ++ci)
      for (Lit l : f.clause(ci)) occ[l].push_back(ci);
  }

  const std::vector<int>& clauses_with(Lit l) const {
    static const std::vector<int> none;
    auto it = occ.find(l);
    return it == occ.end() ? none : it->second;
  }

  bool usable_connector(Lit l, int entered_var) const {
    int v = var_of(l);
    return f.existential(v) && f.block_of(v) > source_block &&
           v != entered_var;
  }

  // goal(clause index, entered_var, depth) -> true when the path may end here.
  template <typename Goal>
  std::optional<ResolutionPath> run(Lit start_lit, Goal goal) {
    struct Node {
      int clause, entered_var, parent;
      Lit via;  // connector literal in the parent clause
    };
    std::vector<Node> nodes;
    std::set<std::pair<int, int>> seen;
    std::queue<int> queue;

    auto push = [&](int clause, int entered_var, int parent, Lit via) {
      if (!seen.insert({clause, entered_var}).second) return;
      nodes.push_back(Node{clause, entered_var, parent, via});
      queue.push(static_cast<int>(nodes.size()) - 1);
    };

    for (int ci : clauses_with(start_lit)) push(ci, 0, -1, 0);

    while (!queue.empty()) {
      int ni = queue.front();
      queue.pop();
      Node node = nodes[ni];
      int depth = 1;
      for (int p = node.parent; p >= 0; p = nodes[p].parent) ++depth;

      if (goal(node.clause, node.entered_var, depth)) {
        ResolutionPath path;
        for (int p = ni; p >= 0; p = nodes[p].parent) {
          path.clause_indices.push_back(nodes[p].clause);
          if (nodes[p].parent >= 0) path.connectors.push_back(nodes[p].via);
        }
        std::reverse(path.clause_indices.begin(), path.clause_indices.end());
        std::reverse(path.connectors.begin(), path.connectors.end());
        return path;
      }

      for (Lit l : f.clause(node.clause)) {
        if (!usable_connector(l, node.entered_var)) continue;
        for (int cj : clauses_with(-l)) push(cj, var_of(l), ni, l);
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<ResolutionPath> find_resolution_path(const Qbf& f, Lit from_ulit,
                                                   Lit to_elit) {
  int uvar = var_of(from_ulit), evar = var_of(to_elit);
  if (!f.universal(uvar))
    throw std::invalid_argument("path source must be universal");
  if (!f.existential(evar) || f.block_of(evar) <= f.block_of(uvar))
    throw std::invalid_argument(
        "path target must be existential and strictly right of the source");
  Search search(f, uvar);
  return search.run(from_ulit, [&](int clause, int entered_var, int) {
    return entered_var != evar && clause_contains(f.clause(clause), to_elit);
  });
}

std::optional<ResolutionPath> find_blocking_path(const Qbf& f, int uvar) {
  if (!f.universal(uvar)) throw std::invalid_argument("not universal");
  Search search(f, uvar);
  // Either direction counts; a single clause never does (tautologies are
  // rejected at parse, and a one-clause "path" would need both polarities).
  for (Lit start : {-uvar, uvar}) {
    auto path = search.run(start, [&](int clause, int, int depth) {
      return depth >= 2 && clause_contains(f.clause(clause), -start);
    });
    if (path) return path;
  }
  return std::nullopt;
}

bool drrs_depends(const Qbf& f, int evar, int uvar) {
  if (f.block_of(evar) <= f.block_of(uvar))
    throw std::invalid_argument("dependency target must be right of source");
  auto reaches = [&](Lit u, Lit e) {
    return find_resolution_path(f, u, e).has_value();
  };
  return (reaches(uvar, evar) && reaches(-uvar, -evar)) ||
         (reaches(uvar, -evar) && reaches(-uvar, evar));
}

bool eur_droppable(const Qbf& f, const Clause& c, Lit ulit) {
  if (!clause_contains(c, ulit))
    throw rule_error("universal literal not in clause");
  int uvar = var_of(ulit);
  for (Lit l : c) {
    int v = var_of(l);
    if (v == uvar || !f.existential(v)) continue;
    if (f.block_of(v) <= f.block_of(uvar)) continue;
    if (drrs_depends(f, v, uvar)) return false;
  }
  return true;
}

namespace {

PathCheck fail(const std::string& why) { return PathCheck{false, why}; }

PathCheck check_structure(const Qbf& f, const ResolutionPath& p,
                          int source_var) {
  size_t n = p.clause_indices.size();
  if (n == 0) return fail("empty path");
  if (p.connectors.size() + 1 != n)
    return fail("connector count must be clause count minus one");
  for (int ci : p.clause_indices)
    if (ci < 0 || ci >= f.clause_count()) return fail("clause index range");
  for (size_t i = 0; i + 1 < n; ++i) {
    Lit e = p.connectors[i];
    int v = var_of(e);
    if (!f.existential(v)) return fail("connector not existential");
    if (f.block_of(v) <= f.block_of(source_var))
      return fail("connector not strictly right of source universal");
    if (!clause_contains(f.clause(p.clause_indices[i]), e))
      return fail("connector missing from its clause");
    if (!clause_contains(f.clause(p.clause_indices[i + 1]), -e))
      return fail("complement missing from successor clause");
    if (i + 1 < p.connectors.size() &&
        var_of(p.connectors[i + 1]) == var_of(e))
      return fail("adjacent connectors share a variable");
  }
  return PathCheck{};
}

}  // namespace

PathCheck validate_resolution_path(const Qbf& f, const ResolutionPath& p,
                                   Lit from_ulit, Lit to_elit) {
  PathCheck s = check_structure(f, p, var_of(from_ulit));
  if (!s.ok) return s;
  if (!clause_contains(f.clause(p.clause_indices.front()), from_ulit))
    return fail("first clause lacks the source literal");
  if (!clause_contains(f.clause(p.clause_indices.back()), to_elit))
    return fail("last clause lacks the target literal");
  if (!p.connectors.empty() &&
      var_of(p.connectors.back()) == var_of(to_elit))
    return fail("target entered on its own variable");
  return PathCheck{};
}

PathCheck validate_blocking_path(const Qbf& f, const ResolutionPath& p,
                                 int uvar) {
  PathCheck s = check_structure(f, p, uvar);
  if (!s.ok) return s;
  if (p.clause_indices.size() < 2) return fail("blocking path too short");
  const Clause& first = f.clause(p.clause_indices.front());
  const Clause& last = f.clause(p.clause_indices.back());
  bool forward = clause_contains(first, uvar) && clause_contains(last, -uvar);
  bool backward = clause_contains(first, -uvar) && clause_contains(last, uvar);
  if (!forward && !backward)
    return fail("endpoints do not carry opposite polarities of the universal");
  return PathCheck{};
}

}  // namespace qproof
