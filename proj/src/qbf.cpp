#include "qproof/qbf.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qproof {

Clause canonical_clause(Clause c) {
  std::sort(c.begin(), c.end(), lit_less);
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

bool clause_is_tautology(const Clause& c) {
  for (size_t i = 0; i + 1 < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (c[i] == -c[j]) return true;
  return false;
}

bool clause_contains(const Clause& c, Lit l) {
  return std::find(c.begin(), c.end(), l) != c.end();
}

std::string clause_to_string(const Clause& c) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out << ' ';
    out << c[i];
  }
  out << ')';
  return out.str();
}

int Qbf::add_block(Quant q) {
  if (!blocks_.empty() && blocks_.back().quant == q)
    throw std::logic_error("adjacent quantifier blocks must alternate");
  blocks_.push_back(Block{q, {}});
  return static_cast<int>(blocks_.size());
}

void Qbf::declare_in_block(int var, int block_index) {
  if (var <= 0) throw std::invalid_argument("variable ids are positive");
  if (block_index < 1 || block_index > block_count())
    throw std::invalid_argument("no such block");
  if (declared(var)) throw std::invalid_argument("variable already declared");
  if (var >= static_cast<int>(block_of_.size())) block_of_.resize(var + 1, 0);
  block_of_[var] = block_index;
  blocks_[block_index - 1].vars.push_back(var);
  max_var_ = std::max(max_var_, var);
}

void Qbf::declare_like(int var, int anchor) {
  declare_in_block(var, block_of(anchor));
}

Quant Qbf::quant_of(int var) const {
  return blocks_.at(block_of(var) - 1).quant;
}

int Qbf::block_of(int var) const {
  if (!declared(var)) throw std::invalid_argument("undeclared variable");
  return block_of_[var];
}

std::vector<int> Qbf::universals() const {
  std::vector<int> out;
  for (const Block& b : blocks_)
    if (b.quant == Quant::Forall)
      out.insert(out.end(), b.vars.begin(), b.vars.end());
  return out;
}

int Qbf::add_clause(Clause c, std::string label) {
  c = canonical_clause(std::move(c));
  for (Lit l : c)
    if (!declared(var_of(l)))
      throw std::invalid_argument("clause uses undeclared variable " +
                                  std::to_string(var_of(l)));
  matrix_.push_back(std::move(c));
  labels_.push_back(std::move(label));
  return static_cast<int>(matrix_.size()) - 1;
}

void Qbf::remove_clause(int index) {
  matrix_.erase(matrix_.begin() + index);
  labels_.erase(labels_.begin() + index);
}

int Qbf::find_clause(const Clause& c) const {
  for (size_t i = 0; i < matrix_.size(); ++i)
    if (matrix_[i] == c) return static_cast<int>(i);
  return -1;
}

void Qbf::set_clause(int index, Clause c) {
  matrix_.at(index) = canonical_clause(std::move(c));
}

void Qbf::set_label(int index, std::string label) {
  labels_.at(index) = std::move(label);
}

void Annotation::set(const Qbf& f, int var, bool value) {
  if (!f.universal(var))
    throw rule_error("annotation key " + std::to_string(var) +
                     " is not universal");
  auto pos = entries_.begin();
  for (; pos != entries_.end(); ++pos) {
    if (pos->var == var) {
      if (pos->value != value)
        throw rule_error("conflicting annotation value for variable " +
                         std::to_string(var));
      return;
    }
    int pb = f.block_of(pos->var), vb = f.block_of(var);
    if (pb > vb || (pb == vb && pos->var > var)) break;
  }
  entries_.insert(pos, Entry{var, value});
}

std::optional<bool> Annotation::value_of(int var) const {
  for (const Entry& e : entries_)
    if (e.var == var) return e.value;
  return std::nullopt;
}

bool Annotation::falsifies_literal(Lit l) const {
  std::optional<bool> v = value_of(var_of(l));
  return v.has_value() && *v == (l < 0);
}

Annotation Annotation::restrict_left_of(const Qbf& f, int var) const {
  Annotation out;
  for (const Entry& e : entries_)
    if (f.strictly_left_of(e.var, var)) out.entries_.push_back(e);
  return out;
}

Annotation Annotation::complete_with(const Qbf& f, const Annotation& sigma,
                                     int base_var) const {
  Annotation out = restrict_left_of(f, base_var);
  for (const Entry& e : sigma.entries_)
    if (f.strictly_left_of(e.var, base_var) && !out.value_of(e.var))
      out.set(f, e.var, e.value);
  return out;
}

std::string Annotation::to_string() const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << (entries_[i].value ? "" : "-") << entries_[i].var;
  }
  out << "}";
  return out.str();
}

int compare_annotations(const Annotation& a, const Annotation& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  for (size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].var != eb[i].var) return ea[i].var < eb[i].var ? -1 : 1;
    if (ea[i].value != eb[i].value) return ea[i].value < eb[i].value ? -1 : 1;
  }
  if (ea.size() != eb.size()) return ea.size() < eb.size() ? -1 : 1;
  return 0;
}

int compare_ann_lits(const AnnLit& a, const AnnLit& b) {
  if (var_of(a.lit) != var_of(b.lit))
    return var_of(a.lit) < var_of(b.lit) ? -1 : 1;
  if (a.lit != b.lit) return a.lit > b.lit ? -1 : 1;  // positive first
  return compare_annotations(a.ann, b.ann);
}

AnnClause canonical_ann_clause(AnnClause c) {
  std::sort(c.begin(), c.end(), [](const AnnLit& a, const AnnLit& b) {
    return compare_ann_lits(a, b) < 0;
  });
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

bool ann_clause_contains(const AnnClause& c, const AnnLit& l) {
  return std::find(c.begin(), c.end(), l) != c.end();
}

std::string ann_lit_to_string(const AnnLit& l) {
  std::string out = std::to_string(l.lit);
  if (!l.ann.empty()) out += "^" + l.ann.to_string();
  return out;
}

std::string ann_clause_to_string(const AnnClause& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += " ";
    out += ann_lit_to_string(c[i]);
  }
  return out + ")";
}

int VarTable::intern(Qbf& f, int base, const Annotation& tau) {
  if (!f.existential(base))
    throw rule_error("annotated base variable must be existential");
  for (const Annotation::Entry& e : tau.entries())
    if (!f.strictly_left_of(e.var, base))
      throw rule_error("annotation key " + std::to_string(e.var) +
                       " is not left of base " + std::to_string(base));
  if (tau.empty()) return base;
  if (int id = lookup(base, tau)) return id;
  if (first_fresh_ == 0) first_fresh_ = f.max_var() + 1;
  int id = first_fresh_ + static_cast<int>(ids_.size());
  f.declare_like(id, base);
  by_key_.push_back({Entry{base, tau}, id});
  ids_.push_back(id);
  entries_.push_back(Entry{base, tau});
  return id;
}

int VarTable::lookup(int base, const Annotation& tau) const {
  if (tau.empty()) return base;
  for (const auto& [entry, id] : by_key_)
    if (entry.base == base && entry.ann == tau) return id;
  return 0;
}

const VarTable::Entry* VarTable::entry_of(int var) const {
  if (first_fresh_ == 0 || var < first_fresh_) return nullptr;
  size_t idx = static_cast<size_t>(var - first_fresh_);
  if (idx >= entries_.size()) return nullptr;
  return &entries_[idx];
}

Lit VarTable::ground_lit(Qbf& f, const AnnLit& al) {
  int id = intern(f, var_of(al.lit), al.ann);
  return al.lit < 0 ? -id : id;
}

Clause VarTable::ground_clause(Qbf& f, const AnnClause& c) {
  Clause out;
  out.reserve(c.size());
  for (const AnnLit& al : c) out.push_back(ground_lit(f, al));
  return canonical_clause(std::move(out));
}

}  // namespace qproof
