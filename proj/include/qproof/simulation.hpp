#ifndef QPROOF_SIMULATION_HPP_
#define QPROOF_SIMULATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "qproof/dependency.hpp"
#include "qproof/expansion.hpp"
#include "qproof/qbf.hpp"
#include "qproof/qrat.hpp"

namespace qproof {

/// Result of lowering a resolution-only expansion refutation to the clausal
/// script format: definitions for every annotated variable, annotated
/// clauses with their universal literals retained, elimination of inputs
/// and definitions, right-to-left universal drops, then a replay of the
/// resolution steps.
struct ExpResTranslation {
  QratProof proof;
  /// Formula state between input/definition elimination and the universal
  /// drops: extended prefix plus the annotated clauses.
  Qbf scaffold_state;
  VarTable table;
};

ExpResTranslation translate_expres_to_qrat(const Qbf& f,
                                           const ExpansionProof& p);

struct BlockedWitness {
  int universal;
  ResolutionPath path;              // indices into halt_state.matrix()
  std::vector<std::string> labels;  // one per path clause
  std::vector<Clause> clauses;
};

/// Two-pass lowering for proofs with instantiation steps. Pass one keeps
/// the definition clauses needed to justify instantiations, drops the rest,
/// and halts with a witness if any universal still connects to its own
/// complement through a resolution path. Pass two drops the universal
/// literals and replays the proof, expanding instantiations into
/// definition-backed additions.
struct IrcalcTranslation {
  bool blocked = false;
  QratProof proof;  // complete only when !blocked
  std::optional<BlockedWitness> witness;
  /// Retained definition clauses (ground, deduplicated, emission order).
  std::vector<Clause> important_definitions;
  /// Formula state at the blocking-path scan: annotated clauses plus the
  /// retained definitions.
  Qbf halt_state;
  VarTable table;
};

IrcalcTranslation translate_ircalc_to_qrat(const Qbf& f,
                                           const ExpansionProof& p);

/// Text rendering of a blocked outcome:
///   RESULT: BLOCKED u=<id>
///   path: <label>(,<label>)*
std::string blocked_report(const BlockedWitness& w);

}  // namespace qproof

#endif  // QPROOF_SIMULATION_HPP_
