#pragma once

#include <optional>
#include <string_view>

namespace setadf {

/// mod is an ADF-only semantics; the others apply to both formalisms.
enum class Semantics { Cf, Adm, Com, Grd, Prf, Stb, Mod };

std::string_view semantics_name(Semantics s) noexcept;  // "cf", "adm", ...
std::optional<Semantics> parse_semantics(std::string_view name) noexcept;

inline constexpr Semantics kSetafSemantics[] = {Semantics::Cf,  Semantics::Adm, Semantics::Com,
                                                Semantics::Grd, Semantics::Prf, Semantics::Stb};
inline constexpr Semantics kAdfSemantics[] = {Semantics::Cf,  Semantics::Adm, Semantics::Com,
                                              Semantics::Grd, Semantics::Prf, Semantics::Stb,
                                              Semantics::Mod};

}  // namespace setadf
