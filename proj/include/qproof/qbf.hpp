#ifndef QPROOF_QBF_HPP_
#define QPROOF_QBF_HPP_

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qproof {

enum class Quant { Exists, Forall };

/// DIMACS-style signed literal over positive integer variable ids.
using Lit = int;

/// Ground clause. Canonical form: sorted by (variable, sign), positive
/// literal before negative, no duplicates.
using Clause = std::vector<Lit>;

inline int var_of(Lit l) { return l < 0 ? -l : l; }
inline bool positive(Lit l) { return l > 0; }

/// Total order on literals: by variable id, positive before negative.
inline bool lit_less(Lit a, Lit b) {
  int va = var_of(a), vb = var_of(b);
  if (va != vb) return va < vb;
  return a > b;
}

Clause canonical_clause(Clause c);
bool clause_is_tautology(const Clause& c);
bool clause_contains(const Clause& c, Lit l);
std::string clause_to_string(const Clause& c);

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Violation of an inference-rule precondition (bad pivot, unsound axiom...).
class rule_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Block {
  Quant quant;
  std::vector<int> vars;  // declaration order
};

/// Prenex QBF: alternating quantifier blocks plus a CNF matrix.
/// Clause labels are optional display names used in path reports.
class Qbf {
 public:
  // Appends a block; adjacent blocks must alternate quantifier.
  int add_block(Quant q);
  void declare_in_block(int var, int block_index);
  // Places `var` in the same block as `anchor`.
  void declare_like(int var, int anchor);

  bool declared(int var) const {
    return var > 0 && var < static_cast<int>(block_of_.size()) &&
           block_of_[var] != 0;
  }
  Quant quant_of(int var) const;
  int block_of(int var) const;
  bool universal(int var) const { return quant_of(var) == Quant::Forall; }
  bool existential(int var) const { return quant_of(var) == Quant::Exists; }

  /// b occurs at or to the right of a (block(a) <= block(b)).
  bool left_of(int a, int b) const { return block_of(a) <= block_of(b); }
  bool strictly_left_of(int a, int b) const {
    return block_of(a) < block_of(b);
  }

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const Block& block(int index) const { return blocks_.at(index - 1); }
  int max_var() const { return max_var_; }

  /// Universal variables in prefix order.
  std::vector<int> universals() const;

  int add_clause(Clause c, std::string label = "");
  void remove_clause(int index);
  /// Index of the first clause canonically equal to `c`, or -1.
  int find_clause(const Clause& c) const;
  void set_clause(int index, Clause c);

  const std::vector<Clause>& matrix() const { return matrix_; }
  const Clause& clause(int index) const { return matrix_.at(index); }
  int clause_count() const { return static_cast<int>(matrix_.size()); }
  const std::string& label(int index) const { return labels_.at(index); }
  void set_label(int index, std::string label);

 private:
  std::vector<Block> blocks_;
  std::vector<int> block_of_;  // var -> 1-based block index, 0 = undeclared
  int max_var_ = 0;
  std::vector<Clause> matrix_;
  std::vector<std::string> labels_;
};

/// Partial assignment to universal variables, attached to existential
/// literals as a superscript. Entries are kept in prefix (block) order;
/// two annotations are equal iff they assign the same values.
class Annotation {
 public:
  struct Entry {
    int var;
    bool value;
    bool operator==(const Entry&) const = default;
  };

  Annotation() = default;

  /// Inserts an entry, keeping canonical order. Conflicting re-insertion
  /// of the same variable is a rule violation.
  void set(const Qbf& f, int var, bool value);

  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::optional<bool> value_of(int var) const;

  /// True iff the annotation assigns var(l) the value making literal l false.
  bool falsifies_literal(Lit l) const;

  /// Entries strictly left of `var` in f's prefix.
  Annotation restrict_left_of(const Qbf& f, int var) const;

  /// Completion: this annotation's entries take precedence over sigma's;
  /// the result is restricted to universals strictly left of `base_var`.
  Annotation complete_with(const Qbf& f, const Annotation& sigma,
                           int base_var) const;

  bool operator==(const Annotation&) const = default;

  std::string to_string() const;

 private:
  std::vector<Entry> entries_;  // sorted by (block, var) of the owning QBF
};

/// -1, 0, +1 lexicographic comparison; total order for canonical clause forms.
int compare_annotations(const Annotation& a, const Annotation& b);

/// Existential literal with an annotation (possibly empty).
struct AnnLit {
  Lit lit = 0;
  Annotation ann;
  bool operator==(const AnnLit&) const = default;
};

using AnnClause = std::vector<AnnLit>;

int compare_ann_lits(const AnnLit& a, const AnnLit& b);
AnnClause canonical_ann_clause(AnnClause c);
bool ann_clause_contains(const AnnClause& c, const AnnLit& l);
std::string ann_lit_to_string(const AnnLit& l);
std::string ann_clause_to_string(const AnnClause& c);

/// Interning table from (base variable, annotation) to fresh variable ids.
/// The empty annotation maps to the base variable itself. Fresh variables
/// are declared in the same quantifier block as their base, ids assigned
/// in order of first appearance.
class VarTable {
 public:
  /// Returns the id for base^tau, allocating and declaring a fresh variable
  /// in `f` on first sight.
  int intern(Qbf& f, int base, const Annotation& tau);
  /// Returns 0 when base^tau has not been interned.
  int lookup(int base, const Annotation& tau) const;

  struct Entry {
    int base;
    Annotation ann;
  };
  /// nullptr for variables that are not interned annotated variables.
  const Entry* entry_of(int var) const;

  Lit ground_lit(Qbf& f, const AnnLit& al);
  Clause ground_clause(Qbf& f, const AnnClause& c);

  /// Interned ids in allocation order.
  const std::vector<int>& interned_ids() const { return ids_; }

 private:
  std::vector<std::pair<Entry, int>> by_key_;  // linear; tables stay small
  std::vector<int> ids_;
  int first_fresh_ = 0;
  std::vector<Entry> entries_;  // parallel to ids_
};

}  // namespace qproof

#endif  // QPROOF_QBF_HPP_
