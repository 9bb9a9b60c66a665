#ifndef QPROOF_EXPANSION_HPP_
#define QPROOF_EXPANSION_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qproof/qbf.hpp"

namespace qproof {

enum class Calculus { IrCalc, ExpRes };

/// One derivation step. `result` is the stated clause; the checker
/// re-derives it from the parents and compares canonically.
struct ExpansionStep {
  enum class Kind { Axiom, Inst, Res };

  int id = 0;
  Kind kind = Kind::Axiom;
  AnnClause result;

  // Axiom: 1-based index into the input matrix. ExpRes axioms carry the
  // chosen total assignment to all universals; IrCalc axioms carry none.
  int input_clause = 0;
  std::optional<Annotation> full_assignment;

  // Inst: parent step id and the instantiating assignment.
  int parent = 0;
  Annotation sigma;

  // Res: pivot occurs in parent's result, its complement in parent2's.
  int parent2 = 0;
  AnnLit pivot;
};

struct ExpansionProof {
  Calculus calculus = Calculus::IrCalc;
  std::vector<ExpansionStep> steps;

  bool is_refutation() const {
    return !steps.empty() && steps.back().result.empty();
  }
  const ExpansionStep* step_with_id(int id) const;
};

/// Axiom download with partial annotations: drop the universal literals and
/// annotate each existential literal with the assignment falsifying exactly
/// the clause's universal literals to its left.
AnnClause axiom_ircalc(const Qbf& f, int clause_index);

/// Axiom download with a total assignment: tau_full must assign every
/// universal of the prefix and falsify every universal literal of the
/// clause; each existential is annotated with its left restriction.
AnnClause axiom_expres(const Qbf& f, int clause_index,
                       const Annotation& tau_full);

/// inst(sigma, c): every annotation becomes its completion with sigma,
/// restricted to the universals left of the literal's base.
AnnClause instantiate(const Qbf& f, const Annotation& sigma,
                      const AnnClause& c);

/// Resolution over an annotated pivot; both sides must carry the pivot with
/// an identical annotation.
AnnClause resolve_annotated(const AnnClause& c1, const AnnClause& c2,
                            const AnnLit& pivot);

struct ExpansionVerdict {
  bool valid = true;
  int failed_step = 0;  // step id
  std::string reason;
  std::vector<std::string> warnings;
};

ExpansionVerdict check_expansion_proof(const Qbf& f, const ExpansionProof& p);

/// One step per line, whitespace-separated, 0-terminated:
///   c calculus <ircalc|expres>
///   s <id> a <input-clause-index> [<s-ulit>* |] <alit>* 0
///   s <id> i <parent-id> <s-ulit>* | <alit>* 0
///   s <id> r <p1> <p2> <pivot-alit> <alit>* 0
/// Annotated literal: [-]<base> optionally ^{<s-ulit>,...} in prefix order;
/// a positive annotation id assigns 1, negative assigns 0.
ExpansionProof parse_expansion_proof(std::istream& in, const Qbf& f);
ExpansionProof parse_expansion_proof_string(const std::string& text,
                                            const Qbf& f);
ExpansionProof parse_expansion_proof_file(const std::string& path,
                                          const Qbf& f);
void emit_expansion_proof(const ExpansionProof& p, std::ostream& out);
std::string emit_expansion_proof_string(const ExpansionProof& p);

}  // namespace qproof

#endif  // QPROOF_EXPANSION_HPP_
