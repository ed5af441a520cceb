#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setadf/errors.hpp"

namespace setadf {

/// Upper bound on the number of arguments (statements, atoms) that any
/// exhaustive operation accepts. 3^12 is roughly 531k candidates.
inline constexpr std::size_t kMaxArguments = 12;

/// Throws SizeError if `count` exceeds kMaxArguments.
void require_enumerable(std::size_t count, std::string_view what);

bool is_valid_argument_name(std::string_view name) noexcept;

/// Name of an argument or statement: non-empty, [A-Za-z0-9_]+, case-sensitive.
class ArgumentId {
 public:
  explicit ArgumentId(std::string name);

  const std::string& str() const noexcept { return name_; }

  friend auto operator<=>(const ArgumentId&, const ArgumentId&) = default;
  friend bool operator==(const ArgumentId&, const ArgumentId&) = default;

 private:
  std::string name_;
};

std::vector<ArgumentId> make_ids(std::initializer_list<std::string_view> names);

/// The three values, shared by labellings and interpretations under the fixed
/// bijection in <-> t, out <-> f, undec <-> u.
enum class Value3 : std::uint8_t {
  Undec = 0,
  Out = 1,
  In = 2,
  U = Undec,
  F = Out,
  T = In,
};

std::string_view label_name(Value3 v) noexcept;  // "in", "out", "undec"
std::string_view truth_name(Value3 v) noexcept;  // "t", "f", "u"

/// Sorted, duplicate-free argument set. Copies share storage.
class Domain {
 public:
  Domain();
  explicit Domain(std::vector<ArgumentId> ids);

  std::size_t size() const noexcept { return ids_->size(); }
  bool empty() const noexcept { return ids_->empty(); }
  const ArgumentId& operator[](std::size_t i) const { return (*ids_)[i]; }
  auto begin() const noexcept { return ids_->begin(); }
  auto end() const noexcept { return ids_->end(); }
  const std::vector<ArgumentId>& ids() const noexcept { return *ids_; }

  std::optional<std::size_t> index_of(const ArgumentId& id) const noexcept;
  bool contains(const ArgumentId& id) const noexcept { return index_of(id).has_value(); }
  /// Like index_of, but throws DomainError for unknown ids.
  std::size_t require_index(const ArgumentId& id) const;

  friend bool operator==(const Domain& a, const Domain& b) noexcept {
    return a.ids_ == b.ids_ || *a.ids_ == *b.ids_;
  }

 private:
  std::shared_ptr<const std::vector<ArgumentId>> ids_;
};

namespace detail {

/// Compares the sorted lists {i | a[i] == x} and {i | b[i] == x}
/// lexicographically. Both spans index the same sorted domain.
int compare_part(std::span<const Value3> a, std::span<const Value3> b, Value3 x) noexcept;

/// Canonical order: by in-part, then out-part, then undec-part, each compared
/// as a sorted list of names.
int canonical_compare(std::span<const Value3> a, std::span<const Value3> b) noexcept;

}  // namespace detail

struct LabelTag {};
struct TruthTag {};

/// A total map from a domain to Value3. Instantiated as Labelling (in/out/undec)
/// and Interpretation (t/f/u); the two are deliberately distinct types.
template <class Tag>
class ThreeValued {
 public:
  ThreeValued(Domain domain, std::vector<Value3> values)
      : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_.size()) {
      throw DomainError("assignment size does not match its domain");
    }
  }

  static ThreeValued uniform(Domain domain, Value3 x) {
    std::vector<Value3> values(domain.size(), x);
    return ThreeValued(std::move(domain), std::move(values));
  }

  /// Builds an assignment from explicit parts; every argument of the domain
  /// must occur in exactly one of the three lists.
  static ThreeValued from_parts(Domain domain, std::span<const ArgumentId> in,
                                std::span<const ArgumentId> out,
                                std::span<const ArgumentId> undec) {
    constexpr auto kUnset = static_cast<Value3>(0xff);
    std::vector<Value3> values(domain.size(), kUnset);
    auto place = [&](std::span<const ArgumentId> ids, Value3 x) {
      for (const auto& id : ids) {
        auto idx = domain.index_of(id);
        if (!idx) throw DomainError("argument '" + id.str() + "' is not in the domain");
        if (values[*idx] != kUnset) {
          throw InvalidInput("argument '" + id.str() + "' is assigned twice");
        }
        values[*idx] = x;
      }
    };
    place(in, Value3::In);
    place(out, Value3::Out);
    place(undec, Value3::Undec);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == kUnset) {
        throw InvalidInput("argument '" + domain[i].str() + "' has no value");
      }
    }
    return ThreeValued(std::move(domain), std::move(values));
  }

  const Domain& domain() const noexcept { return domain_; }
  std::span<const Value3> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  Value3 operator[](std::size_t i) const { return values_[i]; }
  Value3 at(const ArgumentId& id) const { return values_[domain_.require_index(id)]; }

  /// The arguments mapped to x, in domain order.
  std::vector<ArgumentId> part(Value3 x) const {
    std::vector<ArgumentId> ids;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] == x) ids.push_back(domain_[i]);
    }
    return ids;
  }

  bool has(Value3 x) const noexcept {
    return std::find(values_.begin(), values_.end(), x) != values_.end();
  }
  bool is_two_valued() const noexcept { return !has(Value3::Undec); }

  /// The update v|^b_x.
  ThreeValued with(const ArgumentId& b, Value3 x) const {
    auto values = values_;
    values[domain_.require_index(b)] = x;
    return ThreeValued(domain_, std::move(values));
  }

  friend bool operator==(const ThreeValued& a, const ThreeValued& b) {
    return a.values_ == b.values_ && a.domain_ == b.domain_;
  }

 private:
  Domain domain_;
  std::vector<Value3> values_;
};

using Labelling = ThreeValued<LabelTag>;
using Interpretation = ThreeValued<TruthTag>;

struct CanonicalLess {
  template <class Tag>
  bool operator()(const ThreeValued<Tag>& a, const ThreeValued<Tag>& b) const noexcept {
    return detail::canonical_compare(a.values(), b.values()) < 0;
  }
};

/// A set of assignments over one shared domain, iterated in canonical order.
template <class T>
class AssignmentSet {
 public:
  using value_type = T;
  using const_iterator = typename std::set<T, CanonicalLess>::const_iterator;

  explicit AssignmentSet(Domain arguments) : arguments_(std::move(arguments)) {}

  AssignmentSet(Domain arguments, std::initializer_list<T> members)
      : arguments_(std::move(arguments)) {
    for (const auto& m : members) insert(m);
  }

  const Domain& arguments() const noexcept { return arguments_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  /// Returns false if the member was already present.
  bool insert(T member) {
    if (!(member.domain() == arguments_)) {
      throw DomainError("set member has a different domain than the set");
    }
    return members_.insert(std::move(member)).second;
  }

  bool contains(const T& member) const {
    return member.domain() == arguments_ && members_.count(member) > 0;
  }

  friend bool operator==(const AssignmentSet& a, const AssignmentSet& b) {
    return a.arguments_ == b.arguments_ &&
           std::equal(a.members_.begin(), a.members_.end(), b.members_.begin(),
                      b.members_.end());
  }

 private:
  Domain arguments_;
  std::set<T, CanonicalLess> members_;
};

using LabellingSet = AssignmentSet<Labelling>;
using InterpretationSet = AssignmentSet<Interpretation>;

enum class InfoOrder { LessEqual, Greater, Incomparable, Equal };

/// Compares v against w in the information order (u below t and f).
/// LessEqual means v <_i w strictly; identical inputs give Equal.
InfoOrder info_compare(const Interpretation& v, const Interpretation& w);

/// v <=_i w
bool info_leq(const Interpretation& v, const Interpretation& w);

Interpretation update(const Interpretation& v, const ArgumentId& b, Value3 x);

Interpretation lab_to_int(const Labelling& lambda);
Labelling int_to_lab(const Interpretation& v);
InterpretationSet lab_to_int(const LabellingSet& labellings);
LabellingSet int_to_lab(const InterpretationSet& interpretations);

/// Calls f(values) for each of the 3^n total assignments in the order
/// undec < out < in, last argument varying fastest.
template <class F>
void for_each_assignment(std::size_t n, F&& f) {
  std::vector<Value3> values(n, Value3::Undec);
  while (true) {
    f(std::span<const Value3>(values));
    std::size_t i = n;
    for (;;) {
      if (i == 0) return;
      --i;
      if (values[i] != Value3::In) {
        values[i] = static_cast<Value3>(static_cast<std::uint8_t>(values[i]) + 1);
        break;
      }
      values[i] = Value3::Undec;
    }
  }
}

/// Calls f(values) for each of the 2^n two-valued assignments (out before in).
template <class F>
void for_each_two_valued(std::size_t n, F&& f) {
  std::vector<Value3> values(n, Value3::Out);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = (bits >> (n - 1 - i)) & 1U ? Value3::In : Value3::Out;
    }
    f(std::span<const Value3>(values));
  }
}

// ---------------------------------------------------------------------------
// SETAF

/// A collective attack (attackers, target). Setaf normalizes the attacker list
/// to a sorted set.
struct Attack {
  std::vector<ArgumentId> attackers;
  ArgumentId target;

  friend bool operator==(const Attack&, const Attack&) = default;
};

/// Attacks are ordered by target first, then by attacker list.
bool operator<(const Attack& a, const Attack& b);

enum class SetafViolationKind {
  DuplicateArgument,
  EmptyAttackerSet,
  UnknownArgument,
  DuplicateAttack,
};

std::string_view violation_name(SetafViolationKind kind) noexcept;

struct SetafViolation {
  SetafViolationKind kind;
  std::string detail;

  friend bool operator==(const SetafViolation&, const SetafViolation&) = default;
};

/// One entry per violated framework invariant, in input order.
std::vector<SetafViolation> validate_setaf(std::span<const ArgumentId> arguments,
                                           std::span<const Attack> attacks);

/// Argumentation framework with collective attacks. Immutable and always
/// valid: the constructor throws InvalidInput on any violation.
class Setaf {
 public:
  struct IndexedAttack {
    std::vector<std::size_t> attackers;
    std::size_t target;
  };

  Setaf(std::vector<ArgumentId> arguments, std::vector<Attack> attacks);

  const Domain& arguments() const noexcept { return arguments_; }
  std::span<const Attack> attacks() const noexcept { return attacks_; }

  /// Attacks with arguments replaced by domain indices, parallel to attacks().
  std::span<const IndexedAttack> indexed_attacks() const noexcept { return indexed_; }
  /// Positions in indexed_attacks() of the attacks on `target`.
  std::span<const std::size_t> attacks_on(std::size_t target) const {
    return incoming_[target];
  }

  friend bool operator==(const Setaf& a, const Setaf& b) {
    return a.arguments_ == b.arguments_ && a.attacks_ == b.attacks_;
  }

 private:
  Domain arguments_;
  std::vector<Attack> attacks_;
  std::vector<IndexedAttack> indexed_;
  std::vector<std::vector<std::size_t>> incoming_;
};

}  // namespace setadf
