#include "setadf/translation.hpp"

#include "setadf/setaf_semantics.hpp"

namespace setadf {

SetadfView::SetadfView(std::vector<ArgumentId> statements,
                       std::map<ArgumentId, NegCnf> conditions)
    : statements_(std::move(statements)) {
  for (const auto& [s, cnf] : conditions) {
    if (!statements_.contains(s)) {
      throw InvalidInput("condition for undeclared statement '" + s.str() + "'");
    }
    for (const auto& a : cnf.atoms()) {
      if (!statements_.contains(a)) {
        throw InvalidInput("clause of '" + s.str() + "' mentions undeclared '" + a.str() + "'");
      }
    }
  }
  for (const auto& s : statements_) {
    auto it = conditions.find(s);
    if (it == conditions.end()) {
      throw InvalidInput("statement '" + s.str() + "' has no acceptance condition");
    }
    conditions_.push_back(std::move(it->second));
  }
}

const NegCnf& SetadfView::condition(const ArgumentId& s) const {
  return conditions_[statements_.require_index(s)];
}

Adf SetadfView::to_adf() const {
  std::map<ArgumentId, Formula> conditions;
  for (std::size_t i = 0; i < statements_.size(); ++i) {
    conditions.emplace(statements_[i], conditions_[i].to_formula());
  }
  return Adf(statements_.ids(), std::move(conditions));
}

SetadfView setaf_to_setadf(const Setaf& f) {
  std::map<ArgumentId, std::vector<NegCnf::Clause>> clauses;
  for (const auto& a : f.arguments()) clauses[a];
  for (const auto& att : f.attacks()) clauses[att.target].push_back(att.attackers);
  std::map<ArgumentId, NegCnf> conditions;
  for (auto& [a, cls] : clauses) conditions.emplace(a, NegCnf(std::move(cls)));
  return SetadfView(f.arguments().ids(), std::move(conditions));
}

Setaf setadf_to_setaf(const SetadfView& d) {
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < d.statements().size(); ++i) {
    for (const auto& cl : d.condition(i).clauses()) {
      attacks.push_back(Attack{cl, d.statements()[i]});
    }
  }
  return Setaf(d.statements().ids(), std::move(attacks));
}

namespace {

using K = Formula::Kind;

std::optional<ArgumentId> negated_atom(const Formula& f) {
  if (f.kind() != K::Neg) return std::nullopt;
  const auto& inner = f.children()[0];
  if (inner.kind() != K::Atom) return std::nullopt;
  return inner.name();
}

std::optional<NegCnf::Clause> as_clause(const Formula& f) {
  if (auto a = negated_atom(f)) return NegCnf::Clause{*a};
  if (f.kind() != K::Or) return std::nullopt;
  NegCnf::Clause cl;
  for (const auto& c : f.children()) {
    auto a = negated_atom(c);
    if (!a) return std::nullopt;
    cl.push_back(*a);
  }
  return cl;
}

std::optional<NegCnf> as_neg_cnf(const Formula& f) {
  if (f.kind() == K::Top) return NegCnf{};
  if (auto cl = as_clause(f)) return NegCnf({*cl});
  if (f.kind() != K::And) return std::nullopt;
  std::vector<NegCnf::Clause> clauses;
  for (const auto& c : f.children()) {
    auto cl = as_clause(c);
    if (!cl) return std::nullopt;
    clauses.push_back(std::move(*cl));
  }
  return NegCnf(std::move(clauses));
}

}  // namespace

std::optional<SetadfView> as_setadf(const Adf& d) {
  std::map<ArgumentId, NegCnf> conditions;
  for (std::size_t i = 0; i < d.statements().size(); ++i) {
    auto cnf = as_neg_cnf(d.condition(i));
    if (!cnf) return std::nullopt;
    conditions.emplace(d.statements()[i], std::move(*cnf));
  }
  return SetadfView(d.statements().ids(), std::move(conditions));
}

bool is_setadf(const Adf& d) { return as_setadf(d).has_value(); }

bool is_sfadf(const Adf& d) { return is_support_free(d); }

SetadfView prune_to_sfadf(const SetadfView& d) {
  std::map<ArgumentId, NegCnf> conditions;
  for (std::size_t i = 0; i < d.statements().size(); ++i) {
    NegCnf pruned = d.condition(i).minimized();
    if (!equivalent(pruned.to_formula(), d.condition(i).to_formula())) {
      throw InternalError("absorption changed the condition of '" + d.statements()[i].str() +
                          "'");
    }
    conditions.emplace(d.statements()[i], std::move(pruned));
  }
  return SetadfView(d.statements().ids(), std::move(conditions));
}

SetadfView normalize(const Adf& d) {
  std::map<ArgumentId, NegCnf> conditions;
  for (std::size_t i = 0; i < d.statements().size(); ++i) {
    const auto& s = d.statements()[i];
    try {
      conditions.emplace(s, to_negative_cnf(d.condition(i)));
    } catch (const NotRepresentable& e) {
      throw NotRepresentable("statement '" + s.str() + "': " + e.what());
    } catch (const PreconditionError& e) {
      throw PreconditionError("statement '" + s.str() + "': " + e.what());
    }
  }
  return prune_to_sfadf(SetadfView(d.statements().ids(), std::move(conditions)));
}

bool verify_correspondence(const Setaf& f, Semantics sigma) {
  if (sigma == Semantics::Mod) {
    throw PreconditionError("semantics 'mod' is not defined for SETAFs");
  }
  Adf d = setaf_to_setadf(f).to_adf();
  InterpretationSet expected = lab_to_int(enumerate(f, sigma));
  if (!(expected == enumerate_adf(d, sigma))) return false;
  if (sigma == Semantics::Stb && !(expected == enumerate_adf(d, Semantics::Mod))) return false;
  return true;
}

}  // namespace setadf
