#pragma once

#include <map>

#include "setadf/formula.hpp"
#include "setadf/model.hpp"
#include "setadf/semantics.hpp"

namespace setadf {

/// Abstract dialectical framework. Links are implicit: b is a parent of s iff
/// b occurs in the acceptance condition of s.
class Adf {
 public:
  /// Throws InvalidInput if a statement lacks a condition, a condition names
  /// an unknown statement, or an atom is not a statement.
  Adf(std::vector<ArgumentId> statements, std::map<ArgumentId, Formula> conditions);

  const Domain& statements() const noexcept { return statements_; }
  const Formula& condition(const ArgumentId& s) const;
  const Formula& condition(std::size_t i) const { return conditions_[i]; }
  std::span<const ArgumentId> parents(const ArgumentId& s) const;
  /// Statement indices of the atoms of condition i, in atom order.
  std::span<const std::size_t> parent_indices(std::size_t i) const { return parent_index_[i]; }

  /// All links (b, s), ordered by s then b.
  std::vector<std::pair<ArgumentId, ArgumentId>> links() const;

  const detail::CompiledFormula& compiled(std::size_t i) const { return compiled_[i]; }

  friend bool operator==(const Adf& a, const Adf& b) {
    return a.statements_ == b.statements_ && a.conditions_ == b.conditions_;
  }

 private:
  Domain statements_;
  std::vector<Formula> conditions_;
  std::vector<std::vector<std::size_t>> parent_index_;
  std::vector<detail::CompiledFormula> compiled_;
};

/// Type of the link (b, a); PreconditionError if b is not a parent of a.
LinkType link_type(const Adf& d, const ArgumentId& b, const ArgumentId& a);

/// Every link is attacking (redundant links count, being attacking too).
bool is_support_free(const Adf& d);

/// The characteristic operator.
Interpretation gamma(const Adf& d, const Interpretation& v);

bool check_interpretation(const Adf& d, const Interpretation& v, Semantics sigma);

InterpretationSet enumerate_adf(const Adf& d, Semantics sigma);

/// Least fixpoint of gamma, by iteration from all-u.
Interpretation grounded(const Adf& d);

struct Reduct {
  Adf adf;
  Interpretation grounded;
};

/// D^v for a two-valued model v; PreconditionError if v is not a model.
Reduct reduct(const Adf& d, const Interpretation& v);

/// mod(D) == stb(D); PreconditionError unless D is support-free.
bool sfadf_mod_eq_stb(const Adf& d);

}  // namespace setadf
