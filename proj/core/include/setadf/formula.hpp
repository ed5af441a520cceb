#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "setadf/model.hpp"

namespace setadf {

/// Immutable propositional formula over argument names. Copies share nodes.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Top, Bot, Neg, And, Or, Imp, Iff };

  static Formula atom(ArgumentId name);
  static Formula atom(std::string name) { return atom(ArgumentId(std::move(name))); }
  static Formula top();
  static Formula bot();
  static Formula neg(Formula f);
  /// And/Or require at least one operand; use top()/bot() for the empty case.
  static Formula conj(std::vector<Formula> operands);
  static Formula disj(std::vector<Formula> operands);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  /// Only valid for Kind::Atom.
  const ArgumentId& name() const;
  std::span<const Formula> children() const noexcept;

  /// Sorted, duplicate-free atom set.
  std::vector<ArgumentId> atoms() const;

  /// Concrete syntax: c(v), c(f), name, neg(F), and(F,...), or(F,...),
  /// imp(F,F), iff(F,F). No whitespace.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Classification { Tautology, Unsatisfiable, Contingent };
enum class LinkType { Supporting, Attacking, Redundant, Dependent };

std::string_view classification_name(Classification c) noexcept;
std::string_view link_type_name(LinkType t) noexcept;

/// Classical value of `f` under a two-valued assignment; throws InvalidInput
/// if an atom of `f` is unassigned.
bool eval2(const Formula& f, const std::map<ArgumentId, bool>& assignment);

/// Replaces assigned atoms by Top (true) or Bot (false). No simplification.
Formula substitute(const Formula& f, const std::map<ArgumentId, bool>& assignment);

/// phi^v: t-atoms become Top, f-atoms Bot, u-atoms stay. Throws DomainError
/// if an atom is outside v's domain.
Formula partial_valuation(const Formula& f, const Interpretation& v);

/// Truth-table classification over all atoms; at most kMaxArguments atoms.
Classification classify(const Formula& f);

/// Same value on every two-valued assignment of the joint atom set.
bool equivalent(const Formula& f, const Formula& g);

/// Type of the link from `parent` into a statement with acceptance condition
/// `condition`, decided over all two-valued assignments of atoms(condition).
LinkType link_type(const Formula& condition, const ArgumentId& parent);

/// Conjunction of non-empty all-negative clauses; each clause {a,b,...} reads
/// as (not a or not b or ...). The empty conjunction is Top.
class NegCnf {
 public:
  using Clause = std::vector<ArgumentId>;

  NegCnf() = default;
  /// Sorts literals and clauses, removes duplicates. Throws InvalidInput on an
  /// empty clause.
  explicit NegCnf(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  bool is_top() const noexcept { return clauses_.empty(); }
  std::vector<ArgumentId> atoms() const;

  /// Drops every clause that is a proper superset of another clause.
  NegCnf minimized() const;
  bool is_minimal() const;

  Formula to_formula() const;

  friend bool operator==(const NegCnf&, const NegCnf&) = default;

 private:
  std::vector<Clause> clauses_;
};

/// Rewrites a condition whose every link is attacking (or redundant) into an
/// equivalent, absorption-minimal NegCnf: CNF by distribution, then every
/// positive literal is deleted.
/// Throws NotRepresentable if `f` is unsatisfiable and PreconditionError if
/// some atom has a supporting-only or dependent link.
NegCnf to_negative_cnf(const Formula& f);

namespace detail {

/// Flattened formula evaluated over a bitmask of its (sorted) atoms.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f);

  const std::vector<ArgumentId>& atoms() const noexcept { return atoms_; }

  /// Bit i of `bits` is the value of atoms()[i].
  bool eval(std::uint64_t bits) const noexcept { return eval_node(root_, bits); }

  /// Atoms with their bit set in `fixed` take the corresponding bit of
  /// `values`; the remaining atoms are enumerated (at most kMaxArguments).
  Classification classify(std::uint64_t fixed, std::uint64_t values) const;

 private:
  struct Node {
    Formula::Kind kind;
    std::uint32_t atom = 0;
    std::uint32_t first = 0;
    std::uint32_t count = 0;
  };

  std::uint32_t build(const Formula& f);
  bool eval_node(std::uint32_t i, std::uint64_t bits) const noexcept;

  std::vector<ArgumentId> atoms_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> children_;
  std::uint32_t root_ = 0;
};

}  // namespace detail

}  // namespace setadf
