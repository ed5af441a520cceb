#pragma once

#include <optional>
#include <string>
#include <vector>

#include "setadf/adf.hpp"
#include "setadf/model.hpp"
#include "setadf/semantics.hpp"
#include "setadf/translation.hpp"

namespace setadf {

struct SignatureViolation {
  /// "<sigma>.<n>" in the numbering of the characterization, or
  /// "<sigma>.empty-set" / "stb.empty-domain".
  std::string id;
  /// Short kebab-case name, e.g. "out-implies-in".
  std::string name;
  std::string description;
  /// The labelling(s) the condition failed on, if any.
  std::vector<Labelling> labellings;
};

/// Outcome of a signature query. The violations are listed in condition
/// order, one entry per violated condition.
struct SignatureVerdict {
  bool accepted = false;
  std::vector<SignatureViolation> violations;
  std::optional<Setaf> witness;

  const SignatureViolation* first() const {
    return violations.empty() ? nullptr : &violations.front();
  }
  bool violates(std::string_view id) const;
};

/// Exact membership test for the stb, prf, cf and grd signatures.
/// Other semantics are rejected with PreconditionError.
SignatureVerdict check_signature(const LabellingSet& l, Semantics sigma);

/// Necessary conditions for adm realizability. Acceptance only means the set
/// was not refuted.
SignatureVerdict check_adm_necessary(const LabellingSet& l);

/// Thrown by realize() on a set outside the signature.
class SignatureRejected : public PreconditionError {
 public:
  explicit SignatureRejected(SignatureVerdict verdict);
  const SignatureVerdict& verdict() const noexcept { return verdict_; }

 private:
  SignatureVerdict verdict_;
};

/// A SETAF F with sigma_Lab(F) = L. With `verify`, F is re-enumerated and a
/// mismatch raises InternalError.
Setaf realize(const LabellingSet& l, Semantics sigma, bool verify = false);

struct DeltaVerdict {
  bool in_delta = false;
  /// sigma(D), the set that was classified.
  InterpretationSet interpretations;
  /// First member (canonical order) with no t and some f.
  std::optional<Interpretation> witness;
  /// A SETADF with the same sigma interpretations; only when !in_delta.
  std::optional<SetadfView> converted;
};

/// Decides whether sigma(D) of a support-free D lies outside the SETADF
/// signature and otherwise builds an equivalent SETADF. The conversion is
/// checked by enumeration; a mismatch raises InternalError.
DeltaVerdict delta_classify(const Adf& d, Semantics sigma);

/// For an in-delta sigma(D) with sigma in {stb, mod, prf}: exactly one member,
/// and for stb/mod that member is all-f.
bool delta_shape_check(const Adf& d, Semantics sigma);

}  // namespace setadf
