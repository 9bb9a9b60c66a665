#ifndef QPROOF_QRAT_HPP_
#define QPROOF_QRAT_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "qproof/qbf.hpp"

namespace qproof {

/// One script step. Literal order inside `lits` is preserved verbatim for
/// lossless round-trips; matching against the formula state is canonical.
struct QratStep {
  enum class Kind { DeclareVar, Add, Delete, DropUniv };
  enum class Hint { None, QratU, Eur };

  Kind kind = Kind::Add;

  int new_var = 0;  // DeclareVar: fresh existential id
  int anchor = 0;   // DeclareVar: placed in this variable's block

  std::vector<Lit> lits;  // Add (first literal = pivot), Delete, DropUniv rest
  Lit drop_lit = 0;       // DropUniv: the universal literal removed

  // Ordering preference for the drop justification; both are always tried.
  Hint hint = Hint::None;

  static QratStep declare(int fresh, int anchor_var);
  static QratStep add(std::vector<Lit> lits);
  static QratStep del(std::vector<Lit> lits);
  static QratStep drop(Lit l, std::vector<Lit> remainder,
                       Hint hint = Hint::None);
};

struct QratProof {
  std::vector<QratStep> steps;

  bool adds_empty_clause() const;
};

enum class QratOutcome { VerifiedRefutation, VerifiedDerivation, Invalid };

struct QratVerdict {
  QratOutcome outcome = QratOutcome::VerifiedDerivation;
  int failed_step = 0;  // 1-based position in the script
  std::string rule;     // name of the rule that failed
  std::string reason;

  bool verified() const { return outcome != QratOutcome::Invalid; }
};

/// Replays the script against a working copy of f:
///  - declarations extend the anchor's block with a fresh existential;
///  - additions must be asymmetric tautologies or carry an existential
///    pivot (the first literal) passing the outer-resolvent check;
///  - deletions are always allowed but the clause must be present;
///  - universal drops must pass the pivot outer-resolvent check or the
///    dependency-scheme reduction test.
/// When final_state is given it receives the formula state after the last
/// verified step.
QratVerdict check_qrat_proof(const Qbf& f, const QratProof& p,
                             Qbf* final_state = nullptr);

/// Line format, 0-terminated, signed decimal literals:
///   x <new-id> <anchor-id> 0      declare fresh existential
///   <lit>* 0                      add (first literal = pivot; bare 0 = empty)
///   d <lit>* 0                    delete
///   u <lit> <lit>* 0              drop the leading universal literal
QratProof parse_qrat(std::istream& in);
QratProof parse_qrat_string(const std::string& text);
QratProof parse_qrat_file(const std::string& path);
void emit_qrat(const QratProof& p, std::ostream& out);
std::string emit_qrat_string(const QratProof& p);

/// Sidecar map documenting interned annotated variables:
///   m <fresh-id> <base-id> <s-ulit>* 0
void emit_var_map(const VarTable& table, std::ostream& out);
std::string emit_var_map_string(const VarTable& table);

}  // namespace qproof

#endif  // QPROOF_QRAT_HPP_
