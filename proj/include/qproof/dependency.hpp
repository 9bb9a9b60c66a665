#ifndef QPROOF_DEPENDENCY_HPP_
#define QPROOF_DEPENDENCY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qproof/qbf.hpp"

namespace qproof {

/// Clause chain C1..Cn linked by complementary existential connector
/// literals e1..e(n-1): ei in Ci, -ei in C(i+1), adjacent connector
/// variables distinct, every connector strictly right of the source
/// universal.
struct ResolutionPath {
  std::vector<int> clause_indices;
  std::vector<Lit> connectors;
};

/// A path whose first clause contains `from_ulit` and whose last clause
/// contains `to_elit` (entered on a different variable). Any valid path is
/// acceptable; the search returns a fewest-clauses one.
std::optional<ResolutionPath> find_resolution_path(const Qbf& f, Lit from_ulit,
                                                   Lit to_elit);

/// A path between clauses carrying opposite polarities of u (either
/// direction); absent when none exists.
std::optional<ResolutionPath> find_blocking_path(const Qbf& f, int uvar);

/// e depends on u iff complementary-polarity path pairs exist:
/// (u ~> e and -u ~> -e) or (u ~> -e and -u ~> e).
bool drrs_depends(const Qbf& f, int evar, int uvar);

/// True iff every existential literal of c right of u is independent of
/// var(u); universal clause-mates are ignored.
bool eur_droppable(const Qbf& f, const Clause& c, Lit ulit);

struct PathCheck {
  bool ok = true;
  std::string reason;
};

/// Re-validates every structural invariant of a path plus its endpoints.
PathCheck validate_resolution_path(const Qbf& f, const ResolutionPath& p,
                                   Lit from_ulit, Lit to_elit);
/// Endpoint rule for blocking paths: first and last clause carry opposite
/// polarities of u; at least two clauses.
PathCheck validate_blocking_path(const Qbf& f, const ResolutionPath& p,
                                 int uvar);

}  // namespace qproof

#endif  // QPROOF_DEPENDENCY_HPP_
