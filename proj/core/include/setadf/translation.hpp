#pragma once

#include <optional>

#include "setadf/adf.hpp"
#include "setadf/formula.hpp"
#include "setadf/model.hpp"
#include "setadf/semantics.hpp"

namespace setadf {

/// An ADF whose every condition is Top or a conjunction of all-negative
/// clauses, kept in clause form.
class SetadfView {
 public:
  /// Throws InvalidInput unless `conditions` covers exactly `statements` and
  /// every clause atom is a statement.
  SetadfView(std::vector<ArgumentId> statements, std::map<ArgumentId, NegCnf> conditions);

  const Domain& statements() const noexcept { return statements_; }
  const NegCnf& condition(const ArgumentId& s) const;
  const NegCnf& condition(std::size_t i) const { return conditions_[i]; }

  Adf to_adf() const;

  friend bool operator==(const SetadfView&, const SetadfView&) = default;

 private:
  Domain statements_;
  std::vector<NegCnf> conditions_;
};

/// One clause per attack; unattacked arguments get Top.
SetadfView setaf_to_setadf(const Setaf& f);

/// One attack per clause.
Setaf setadf_to_setaf(const SetadfView& d);

/// Reads D as a SETADF if its conditions already have the syntactic shape
/// (no rewriting beyond sorting and de-duplicating literals and clauses).
std::optional<SetadfView> as_setadf(const Adf& d);
bool is_setadf(const Adf& d);

/// Every link is attacking; redundant links pass.
bool is_sfadf(const Adf& d);

/// Drops clauses absorbed by a smaller clause of the same condition.
SetadfView prune_to_sfadf(const SetadfView& d);

/// Rewrites every condition with to_negative_cnf, then prunes. Throws
/// NotRepresentable for unsatisfiable conditions and PreconditionError for
/// ADFs with non-attacking links.
SetadfView normalize(const Adf& d);

/// lab_to_int(sigma_Lab(F)) equals sigma of the ADF image of F. For stb the
/// image's two-valued models are compared as well.
bool verify_correspondence(const Setaf& f, Semantics sigma);

}  // namespace setadf
