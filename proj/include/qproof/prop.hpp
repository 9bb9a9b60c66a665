#ifndef QPROOF_PROP_HPP_
#define QPROOF_PROP_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qproof/qbf.hpp"

namespace qproof {

enum class PropOutcome { Conflict, Fixpoint };

struct PropagationResult {
  PropOutcome outcome = PropOutcome::Fixpoint;
  /// values[v] in {-1 unassigned, 0 false, 1 true}; index 0 unused.
  std::vector<int8_t> values;
  /// (literal, reason clause index); -1 marks an assumption.
  std::vector<std::pair<Lit, int>> trail;

  bool assigned(int var) const { return values[var] >= 0; }
};

/// Exhaustive unit propagation of `matrix` under `assumptions`.
/// A complementary assumption pair is an immediate conflict.
PropagationResult unit_propagate(std::span<const Clause> matrix,
                                 std::span<const Lit> assumptions);

/// True iff assuming the negation of every literal of c and propagating
/// yields a conflict. Tautological c is trivially an asymmetric tautology.
bool is_asymmetric_tautology(std::span<const Clause> matrix, const Clause& c);

/// All of c except the pivot, plus those literals of d (pivot's complement
/// removed) that occur at or left of the pivot's block.
Clause outer_resolvent(const Qbf& f, const Clause& c, const Clause& d,
                       Lit pivot);

/// True iff every outer resolvent of c on `pivot` against f's matrix is an
/// asymmetric tautology; vacuously true with no complement occurrences.
bool is_qrat_clause(const Qbf& f, const Clause& c, Lit pivot);

}  // namespace qproof

#endif  // QPROOF_PROP_HPP_
