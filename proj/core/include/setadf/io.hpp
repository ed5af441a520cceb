#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "setadf/adf.hpp"
#include "setadf/model.hpp"

namespace setadf {

enum class InstanceKind { Setaf, Adf };

std::string_view instance_kind_name(InstanceKind k) noexcept;  // "setaf", "adf"

struct InstanceDocument {
  InstanceKind kind;
  std::variant<Setaf, Adf> body;
  std::string source_path;

  const Setaf& setaf() const { return std::get<Setaf>(body); }
  const Adf& adf() const { return std::get<Adf>(body); }
};

/// `arg(x).` and `att([x,...],y).` statements; `%` starts a line comment.
/// All errors, including framework violations, are ParseErrors.
Setaf parse_setaf(std::string_view text);

/// `s(x).` and `ac(x, F).` statements, one `ac` per statement.
Adf parse_adf(std::string_view text);

/// c(v), c(f), atoms, neg/and/or/imp/iff.
Formula parse_formula(std::string_view text);

/// Picks the format from the first statement keyword unless `kind` is given.
InstanceDocument parse_instance(std::string_view text, std::optional<InstanceKind> kind = {},
                                std::string source_path = {});

/// Canonical text: declarations in name order, then attacks (by target, then
/// attackers) or acceptance conditions. One statement per line.
std::string to_text(const Setaf& f);
std::string to_text(const Adf& d);

/// `in:{a,b} out:{c} undec:{}`
std::string format_labelling(const Labelling& lambda);

struct LabellingDocument {
  LabellingSet labellings;
  std::optional<std::string> semantics;
};

/// {"arguments": [...], "labellings": [{"in": [...], "out": [...],
/// "undec": [...]}, ...], "semantics": "..."}; the last key is optional.
/// Each triple must partition the arguments; otherwise InvalidInput.
LabellingDocument read_labelling_json(std::string_view text);
std::string write_labelling_json(const LabellingSet& l,
                                 const std::optional<std::string>& semantics = {});

}  // namespace setadf
