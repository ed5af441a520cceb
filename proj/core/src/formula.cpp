#include "setadf/formula.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace setadf {

struct Formula::Node {
  Kind kind;
  std::optional<ArgumentId> name;
  std::vector<Formula> children;
};

Formula Formula::atom(ArgumentId name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::Top, std::nullopt, {}}));
  return t;
}

Formula Formula::bot() {
  static const Formula b(std::make_shared<const Node>(Node{Kind::Bot, std::nullopt, {}}));
  return b;
}

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Neg, std::nullopt, {std::move(f)}}));
}

Formula Formula::conj(std::vector<Formula> operands) {
  if (operands.empty()) throw InvalidInput("and() needs at least one operand");
  return Formula(std::make_shared<const Node>(Node{Kind::And, std::nullopt, std::move(operands)}));
}

Formula Formula::disj(std::vector<Formula> operands) {
  if (operands.empty()) throw InvalidInput("or() needs at least one operand");
  return Formula(std::make_shared<const Node>(Node{Kind::Or, std::nullopt, std::move(operands)}));
}

Formula Formula::imp(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Imp, std::nullopt, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Iff, std::nullopt, {std::move(lhs), std::move(rhs)}}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const ArgumentId& Formula::name() const {
  if (node_->kind != Kind::Atom) throw PreconditionError("name() on a non-atom formula");
  return *node_->name;
}

std::span<const Formula> Formula::children() const noexcept { return node_->children; }

namespace {

void collect_atoms(const Formula& f, std::set<ArgumentId>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    out.insert(f.name());
    return;
  }
  for (const auto& c : f.children()) collect_atoms(c, out);
}

void write(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  auto list = [&](std::string_view head) {
    out += head;
    out += '(';
    bool first = true;
    for (const auto& c : f.children()) {
      if (!first) out += ',';
      first = false;
      write(c, out);
    }
    out += ')';
  };
  switch (f.kind()) {
    case K::Atom: out += f.name().str(); break;
    case K::Top: out += "c(v)"; break;
    case K::Bot: out += "c(f)"; break;
    case K::Neg: list("neg"); break;
    case K::And: list("and"); break;
    case K::Or: list("or"); break;
    case K::Imp: list("imp"); break;
    case K::Iff: list("iff"); break;
  }
}

}  // namespace

std::vector<ArgumentId> Formula::atoms() const {
  std::set<ArgumentId> s;
  collect_atoms(*this, s);
  return {s.begin(), s.end()};
}

std::string Formula::to_string() const {
  std::string s;
  write(*this, s);
  return s;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Atom) return a.name() == b.name();
  auto ca = a.children();
  auto cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::string_view classification_name(Classification c) noexcept {
  switch (c) {
    case Classification::Tautology: return "tautology";
    case Classification::Unsatisfiable: return "unsatisfiable";
    case Classification::Contingent: return "contingent";
  }
  return "?";
}

std::string_view link_type_name(LinkType t) noexcept {
  switch (t) {
    case LinkType::Supporting: return "supporting";
    case LinkType::Attacking: return "attacking";
    case LinkType::Redundant: return "redundant";
    case LinkType::Dependent: return "dependent";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

bool eval2_unchecked(const Formula& f, const std::map<ArgumentId, bool>& assignment) {
  using K = Formula::Kind;
  auto kids = f.children();
  switch (f.kind()) {
    case K::Atom: {
      auto it = assignment.find(f.name());
      return it->second;
    }
    case K::Top: return true;
    case K::Bot: return false;
    case K::Neg: return !eval2_unchecked(kids[0], assignment);
    case K::And:
      return std::all_of(kids.begin(), kids.end(),
                         [&](const Formula& c) { return eval2_unchecked(c, assignment); });
    case K::Or:
      return std::any_of(kids.begin(), kids.end(),
                         [&](const Formula& c) { return eval2_unchecked(c, assignment); });
    case K::Imp:
      return !eval2_unchecked(kids[0], assignment) || eval2_unchecked(kids[1], assignment);
    case K::Iff:
      return eval2_unchecked(kids[0], assignment) == eval2_unchecked(kids[1], assignment);
  }
  return false;
}

}  // namespace

bool eval2(const Formula& f, const std::map<ArgumentId, bool>& assignment) {
  // checked up front so short-circuiting cannot hide a missing atom
  for (const auto& a : f.atoms()) {
    if (!assignment.count(a)) throw InvalidInput("no value for atom '" + a.str() + "'");
  }
  return eval2_unchecked(f, assignment);
}

Formula substitute(const Formula& f, const std::map<ArgumentId, bool>& assignment) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: {
      auto it = assignment.find(f.name());
      if (it == assignment.end()) return f;
      return it->second ? Formula::top() : Formula::bot();
    }
    case K::Top:
    case K::Bot: return f;
    default: break;
  }
  std::vector<Formula> kids;
  kids.reserve(f.children().size());
  for (const auto& c : f.children()) kids.push_back(substitute(c, assignment));
  switch (f.kind()) {
    case K::Neg: return Formula::neg(std::move(kids[0]));
    case K::And: return Formula::conj(std::move(kids));
    case K::Or: return Formula::disj(std::move(kids));
    case K::Imp: return Formula::imp(std::move(kids[0]), std::move(kids[1]));
    case K::Iff: return Formula::iff(std::move(kids[0]), std::move(kids[1]));
    default: break;
  }
  return f;
}

Formula partial_valuation(const Formula& f, const Interpretation& v) {
  std::map<ArgumentId, bool> decided;
  for (const auto& a : f.atoms()) {
    switch (v.at(a)) {
      case Value3::T: decided.emplace(a, true); break;
      case Value3::F: decided.emplace(a, false); break;
      case Value3::U: break;
    }
  }
  return substitute(f, decided);
}

Classification classify(const Formula& f) {
  detail::CompiledFormula c(f);
  require_enumerable(c.atoms().size(), "formula atom set");
  return c.classify(0, 0);
}

bool equivalent(const Formula& f, const Formula& g) {
  Formula both = Formula::iff(f, g);
  return classify(both) == Classification::Tautology;
}

LinkType link_type(const Formula& condition, const ArgumentId& parent) {
  detail::CompiledFormula c(condition);
  require_enumerable(c.atoms().size(), "parent set");
  const auto& atoms = c.atoms();
  auto pos = std::lower_bound(atoms.begin(), atoms.end(), parent);
  if (pos == atoms.end() || *pos != parent) {
    throw PreconditionError("'" + parent.str() + "' is not a parent of the condition");
  }
  const std::uint64_t bit = std::uint64_t{1} << (pos - atoms.begin());
  bool attacking = true;
  bool supporting = true;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << atoms.size()); ++v) {
    const bool before = c.eval(v);
    const bool after = c.eval(v | bit);
    if (!before && after) attacking = false;
    if (before && !after) supporting = false;
  }
  if (attacking && supporting) return LinkType::Redundant;
  if (attacking) return LinkType::Attacking;
  if (supporting) return LinkType::Supporting;
  return LinkType::Dependent;
}

// ---------------------------------------------------------------------------

NegCnf::NegCnf(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  for (auto& cl : clauses_) {
    if (cl.empty()) throw InvalidInput("negative CNF clause must not be empty");
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
  }
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

std::vector<ArgumentId> NegCnf::atoms() const {
  std::set<ArgumentId> s;
  for (const auto& cl : clauses_) s.insert(cl.begin(), cl.end());
  return {s.begin(), s.end()};
}

namespace {

template <class Clause>
bool proper_subset(const Clause& small, const Clause& big) {
  return small.size() < big.size() &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

NegCnf NegCnf::minimized() const {
  std::vector<Clause> kept;
  for (const auto& cl : clauses_) {
    bool absorbed = std::any_of(clauses_.begin(), clauses_.end(),
                                [&](const Clause& other) { return proper_subset(other, cl); });
    if (!absorbed) kept.push_back(cl);
  }
  return NegCnf(std::move(kept));
}

bool NegCnf::is_minimal() const { return minimized() == *this; }

Formula NegCnf::to_formula() const {
  if (clauses_.empty()) return Formula::top();
  std::vector<Formula> conjuncts;
  for (const auto& cl : clauses_) {
    std::vector<Formula> lits;
    for (const auto& a : cl) lits.push_back(Formula::neg(Formula::atom(a)));
    conjuncts.push_back(lits.size() == 1 ? lits[0] : Formula::disj(std::move(lits)));
  }
  return conjuncts.size() == 1 ? conjuncts[0] : Formula::conj(std::move(conjuncts));
}

// ---------------------------------------------------------------------------
// General CNF by distribution, used only on the way to a NegCnf.

namespace {

struct Literal {
  ArgumentId atom;
  bool positive;
  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using GenClause = std::vector<Literal>;  // sorted, unique
using GenCnf = std::vector<GenClause>;

bool tautological(const GenClause& cl) {
  for (std::size_t i = 0; i + 1 < cl.size(); ++i) {
    if (cl[i].atom == cl[i + 1].atom) return true;
  }
  return false;
}

/// Sort, dedupe, drop tautologies and absorbed clauses.
GenCnf tidy(GenCnf cnf) {
  GenCnf clean;
  for (auto& cl : cnf) {
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    if (!tautological(cl)) clean.push_back(std::move(cl));
  }
  std::sort(clean.begin(), clean.end());
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
  GenCnf kept;
  for (const auto& cl : clean) {
    bool absorbed = std::any_of(clean.begin(), clean.end(),
                                [&](const GenClause& o) { return proper_subset(o, cl); });
    if (!absorbed) kept.push_back(cl);
  }
  return kept;
}

GenCnf concat(GenCnf a, const GenCnf& b) {
  a.insert(a.end(), b.begin(), b.end());
  return tidy(std::move(a));
}

GenCnf product(const GenCnf& a, const GenCnf& b) {
  GenCnf out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      GenClause cl = x;
      cl.insert(cl.end(), y.begin(), y.end());
      out.push_back(std::move(cl));
    }
  }
  return tidy(std::move(out));
}

const GenCnf kTrueCnf{};
const GenCnf kFalseCnf{GenClause{}};

/// CNF of f (positive) or of not-f (!positive).
GenCnf to_cnf(const Formula& f, bool positive) {
  using K = Formula::Kind;
  auto kids = f.children();
  switch (f.kind()) {
    case K::Atom: return {GenClause{Literal{f.name(), positive}}};
    case K::Top: return positive ? kTrueCnf : kFalseCnf;
    case K::Bot: return positive ? kFalseCnf : kTrueCnf;
    case K::Neg: return to_cnf(kids[0], !positive);
    case K::And:
    case K::Or: {
      const bool conjunctive = (f.kind() == K::And) == positive;
      GenCnf acc = conjunctive ? kTrueCnf : kFalseCnf;
      for (const auto& c : kids) {
        GenCnf part = to_cnf(c, positive);
        acc = conjunctive ? concat(std::move(acc), part) : product(acc, part);
      }
      return acc;
    }
    case K::Imp:
      if (positive) return product(to_cnf(kids[0], false), to_cnf(kids[1], true));
      return concat(to_cnf(kids[0], true), to_cnf(kids[1], false));
    case K::Iff:
      if (positive) {
        return concat(product(to_cnf(kids[0], false), to_cnf(kids[1], true)),
                      product(to_cnf(kids[1], false), to_cnf(kids[0], true)));
      }
      return concat(product(to_cnf(kids[0], true), to_cnf(kids[1], true)),
                    product(to_cnf(kids[0], false), to_cnf(kids[1], false)));
  }
  return kTrueCnf;
}

}  // namespace

NegCnf to_negative_cnf(const Formula& f) {
  if (classify(f) == Classification::Unsatisfiable) {
    throw NotRepresentable("unsatisfiable acceptance condition " + f.to_string() +
                           " has no negative CNF");
  }
  for (const auto& a : f.atoms()) {
    auto t = link_type(f, a);
    if (t != LinkType::Attacking && t != LinkType::Redundant) {
      throw PreconditionError("link from '" + a.str() + "' is " +
                              std::string(link_type_name(t)) + ", not attacking");
    }
  }
  std::vector<NegCnf::Clause> clauses;
  for (const auto& cl : to_cnf(f, true)) {
    NegCnf::Clause negative;
    for (const auto& lit : cl) {
      if (!lit.positive) negative.push_back(lit.atom);
    }
    if (negative.empty()) {
      throw InternalError("positive-literal deletion emptied a clause of " + f.to_string());
    }
    clauses.push_back(std::move(negative));
  }
  NegCnf result = NegCnf(std::move(clauses)).minimized();
  if (!equivalent(result.to_formula(), f)) {
    throw InternalError("negative CNF rewrite changed the meaning of " + f.to_string());
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace detail {

CompiledFormula::CompiledFormula(const Formula& f) : atoms_(f.atoms()) {
  if (atoms_.size() > 64) throw SizeError("formula has more than 64 atoms");
  root_ = build(f);
}

std::uint32_t CompiledFormula::build(const Formula& f) {
  Node n{f.kind()};
  if (f.kind() == Formula::Kind::Atom) {
    auto pos = std::lower_bound(atoms_.begin(), atoms_.end(), f.name());
    n.atom = static_cast<std::uint32_t>(pos - atoms_.begin());
  }
  std::vector<std::uint32_t> kids;
  for (const auto& c : f.children()) kids.push_back(build(c));
  n.first = static_cast<std::uint32_t>(children_.size());
  n.count = static_cast<std::uint32_t>(kids.size());
  children_.insert(children_.end(), kids.begin(), kids.end());
  nodes_.push_back(n);
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

bool CompiledFormula::eval_node(std::uint32_t i, std::uint64_t bits) const noexcept {
  using K = Formula::Kind;
  const Node& n = nodes_[i];
  const std::uint32_t* kids = children_.data() + n.first;
  switch (n.kind) {
    case K::Atom: return (bits >> n.atom) & 1U;
    case K::Top: return true;
    case K::Bot: return false;
    case K::Neg: return !eval_node(kids[0], bits);
    case K::And:
      for (std::uint32_t k = 0; k < n.count; ++k) {
        if (!eval_node(kids[k], bits)) return false;
      }
      return true;
    case K::Or:
      for (std::uint32_t k = 0; k < n.count; ++k) {
        if (eval_node(kids[k], bits)) return true;
      }
      return false;
    case K::Imp: return !eval_node(kids[0], bits) || eval_node(kids[1], bits);
    case K::Iff: return eval_node(kids[0], bits) == eval_node(kids[1], bits);
  }
  return false;
}

Classification CompiledFormula::classify(std::uint64_t fixed, std::uint64_t values) const {
  const std::uint64_t all =
      atoms_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << atoms_.size()) - 1;
  const std::uint64_t free = all & ~fixed;
  require_enumerable(static_cast<std::size_t>(std::popcount(free)), "undecided atom set");
  const std::uint64_t base = values & fixed & all;
  bool seen_true = false;
  bool seen_false = false;
  std::uint64_t sub = 0;
  do {
    if (eval(base | sub)) {
      seen_true = true;
    } else {
      seen_false = true;
    }
    if (seen_true && seen_false) return Classification::Contingent;
    sub = (sub - free) & free;
  } while (sub != 0);
  return seen_true ? Classification::Tautology : Classification::Unsatisfiable;
}

}  // namespace detail

}  // namespace setadf
