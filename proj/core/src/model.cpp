#include "setadf/model.hpp"

#include <map>

namespace setadf {

void require_enumerable(std::size_t count, std::string_view what) {
  if (count > kMaxArguments) {
    throw SizeError(std::string(what) + " has " + std::to_string(count) +
                    " elements; exhaustive operations support at most " +
                    std::to_string(kMaxArguments));
  }
}

bool is_valid_argument_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

ArgumentId::ArgumentId(std::string name) : name_(std::move(name)) {
  if (!is_valid_argument_name(name_)) {
    throw InvalidInput("invalid argument name '" + name_ + "'");
  }
}

std::vector<ArgumentId> make_ids(std::initializer_list<std::string_view> names) {
  std::vector<ArgumentId> ids;
  ids.reserve(names.size());
  for (auto n : names) ids.emplace_back(std::string(n));
  return ids;
}

std::string_view label_name(Value3 v) noexcept {
  switch (v) {
    case Value3::In: return "in";
    case Value3::Out: return "out";
    case Value3::Undec: return "undec";
  }
  return "?";
}

std::string_view truth_name(Value3 v) noexcept {
  switch (v) {
    case Value3::T: return "t";
    case Value3::F: return "f";
    case Value3::U: return "u";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Domain::Domain() : ids_(std::make_shared<const std::vector<ArgumentId>>()) {}

Domain::Domain(std::vector<ArgumentId> ids) {
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end()) {
    throw InvalidInput("duplicate argument '" + dup->str() + "'");
  }
  ids_ = std::make_shared<const std::vector<ArgumentId>>(std::move(ids));
}

std::optional<std::size_t> Domain::index_of(const ArgumentId& id) const noexcept {
  auto it = std::lower_bound(ids_->begin(), ids_->end(), id);
  if (it == ids_->end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_->begin());
}

std::size_t Domain::require_index(const ArgumentId& id) const {
  auto idx = index_of(id);
  if (!idx) throw DomainError("argument '" + id.str() + "' is not in the domain");
  return *idx;
}

// ---------------------------------------------------------------------------

namespace detail {

int compare_part(std::span<const Value3> a, std::span<const Value3> b, Value3 x) noexcept {
  auto next = [x](std::span<const Value3> s, std::size_t from) {
    while (from < s.size() && s[from] != x) ++from;
    return from;
  };
  std::size_t ia = next(a, 0);
  std::size_t ib = next(b, 0);
  while (true) {
    const bool end_a = ia >= a.size();
    const bool end_b = ib >= b.size();
    if (end_a && end_b) return 0;
    if (end_a) return -1;
    if (end_b) return 1;
    if (ia != ib) return ia < ib ? -1 : 1;
    ia = next(a, ia + 1);
    ib = next(b, ib + 1);
  }
}

int canonical_compare(std::span<const Value3> a, std::span<const Value3> b) noexcept {
  for (Value3 x : {Value3::In, Value3::Out, Value3::Undec}) {
    if (int c = compare_part(a, b, x); c != 0) return c;
  }
  return 0;
}

}  // namespace detail

// ---------------------------------------------------------------------------

InfoOrder info_compare(const Interpretation& v, const Interpretation& w) {
  if (!(v.domain() == w.domain())) {
    throw DomainError("info_compare on interpretations with different domains");
  }
  bool v_below = true;  // v <=_i w
  bool w_below = true;  // w <=_i v
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == w[i]) continue;
    if (v[i] != Value3::U) v_below = false;
    if (w[i] != Value3::U) w_below = false;
  }
  if (v_below && w_below) return InfoOrder::Equal;
  if (v_below) return InfoOrder::LessEqual;
  if (w_below) return InfoOrder::Greater;
  return InfoOrder::Incomparable;
}

bool info_leq(const Interpretation& v, const Interpretation& w) {
  auto order = info_compare(v, w);
  return order == InfoOrder::LessEqual || order == InfoOrder::Equal;
}

Interpretation update(const Interpretation& v, const ArgumentId& b, Value3 x) {
  return v.with(b, x);
}

Interpretation lab_to_int(const Labelling& lambda) {
  return Interpretation(lambda.domain(), {lambda.values().begin(), lambda.values().end()});
}

Labelling int_to_lab(const Interpretation& v) {
  return Labelling(v.domain(), {v.values().begin(), v.values().end()});
}

InterpretationSet lab_to_int(const LabellingSet& labellings) {
  InterpretationSet out(labellings.arguments());
  for (const auto& l : labellings) out.insert(lab_to_int(l));
  return out;
}

LabellingSet int_to_lab(const InterpretationSet& interpretations) {
  LabellingSet out(interpretations.arguments());
  for (const auto& v : interpretations) out.insert(int_to_lab(v));
  return out;
}

// ---------------------------------------------------------------------------

bool operator<(const Attack& a, const Attack& b) {
  if (a.target != b.target) return a.target < b.target;
  return a.attackers < b.attackers;
}

std::string_view violation_name(SetafViolationKind kind) noexcept {
  switch (kind) {
    case SetafViolationKind::DuplicateArgument: return "duplicate-argument";
    case SetafViolationKind::EmptyAttackerSet: return "empty-attacker-set";
    case SetafViolationKind::UnknownArgument: return "unknown-argument";
    case SetafViolationKind::DuplicateAttack: return "duplicate-attack";
  }
  return "?";
}

namespace {

Attack normalized(Attack a) {
  std::sort(a.attackers.begin(), a.attackers.end());
  a.attackers.erase(std::unique(a.attackers.begin(), a.attackers.end()), a.attackers.end());
  return a;
}

std::string describe(const Attack& a) {
  std::string s = "([";
  for (std::size_t i = 0; i < a.attackers.size(); ++i) {
    if (i) s += ",";
    s += a.attackers[i].str();
  }
  return s + "]," + a.target.str() + ")";
}

}  // namespace

std::vector<SetafViolation> validate_setaf(std::span<const ArgumentId> arguments,
                                           std::span<const Attack> attacks) {
  std::vector<SetafViolation> out;
  std::set<ArgumentId> known;
  for (const auto& a : arguments) {
    if (!known.insert(a).second) {
      out.push_back({SetafViolationKind::DuplicateArgument, a.str()});
    }
  }
  std::set<Attack> seen;
  for (const auto& raw : attacks) {
    Attack att = normalized(raw);
    if (att.attackers.empty()) {
      out.push_back({SetafViolationKind::EmptyAttackerSet, describe(att)});
    }
    for (const auto& b : att.attackers) {
      if (!known.count(b)) out.push_back({SetafViolationKind::UnknownArgument, b.str()});
    }
    if (!known.count(att.target)) {
      out.push_back({SetafViolationKind::UnknownArgument, att.target.str()});
    }
    if (!seen.insert(att).second) {
      out.push_back({SetafViolationKind::DuplicateAttack, describe(att)});
    }
  }
  return out;
}

Setaf::Setaf(std::vector<ArgumentId> arguments, std::vector<Attack> attacks) {
  auto violations = validate_setaf(arguments, attacks);
  if (!violations.empty()) {
    std::string msg = "invalid SETAF:";
    for (const auto& v : violations) {
      msg += " ";
      msg += violation_name(v.kind);
      msg += " " + v.detail + ";";
    }
    throw InvalidInput(msg);
  }
  arguments_ = Domain(std::move(arguments));
  for (auto& a : attacks) attacks_.push_back(normalized(std::move(a)));
  std::sort(attacks_.begin(), attacks_.end());

  incoming_.resize(arguments_.size());
  for (const auto& a : attacks_) {
    IndexedAttack ia;
    for (const auto& b : a.attackers) ia.attackers.push_back(*arguments_.index_of(b));
    ia.target = *arguments_.index_of(a.target);
    incoming_[ia.target].push_back(indexed_.size());
    indexed_.push_back(std::move(ia));
  }
}

}  // namespace setadf
