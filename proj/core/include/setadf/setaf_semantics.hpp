#pragma once

#include "setadf/model.hpp"
#include "setadf/semantics.hpp"

namespace setadf {

/// Membership test for sigma_Lab(F). Semantics::Mod is rejected with
/// PreconditionError; a labelling over another domain with DomainError.
bool check_labelling(const Setaf& f, const Labelling& lambda, Semantics sigma);

/// All sigma labellings of F, by filtering the 3^n candidates.
LabellingSet enumerate(const Setaf& f, Semantics sigma);

/// The complete labelling with subset-minimal in-part.
Labelling grounded_labelling(const Setaf& f);

/// Compares grounded_labelling(F) with the least fixpoint of the
/// characteristic operator on the ADF image of F.
bool grounded_crosscheck(const Setaf& f);

}  // namespace setadf
