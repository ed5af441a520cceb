#include "setadf/semantics.hpp"

#include <array>
#include <utility>

namespace setadf {

namespace {

constexpr std::array<std::pair<Semantics, std::string_view>, 7> kNames{{
    {Semantics::Cf, "cf"},
    {Semantics::Adm, "adm"},
    {Semantics::Com, "com"},
    {Semantics::Grd, "grd"},
    {Semantics::Prf, "prf"},
    {Semantics::Stb, "stb"},
    {Semantics::Mod, "mod"},
}};

}  // namespace

std::string_view semantics_name(Semantics s) noexcept {
  for (auto [sem, name] : kNames) {
    if (sem == s) return name;
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view name) noexcept {
  for (auto [sem, n] : kNames) {
    if (n == name) return sem;
  }
  return std::nullopt;
}

}  // namespace setadf
