#include "setadf/adf.hpp"

#include <algorithm>

namespace setadf {

Adf::Adf(std::vector<ArgumentId> statements, std::map<ArgumentId, Formula> conditions)
    : statements_(std::move(statements)) {
  for (const auto& [s, phi] : conditions) {
    if (!statements_.contains(s)) {
      throw InvalidInput("acceptance condition for undeclared statement '" + s.str() + "'");
    }
  }
  for (const auto& s : statements_) {
    auto it = conditions.find(s);
    if (it == conditions.end()) {
      throw InvalidInput("statement '" + s.str() + "' has no acceptance condition");
    }
    std::vector<std::size_t> idx;
    for (const auto& p : it->second.atoms()) {
      auto i = statements_.index_of(p);
      if (!i) {
        throw InvalidInput("condition of '" + s.str() + "' mentions undeclared statement '" +
                           p.str() + "'");
      }
      idx.push_back(*i);
    }
    conditions_.push_back(it->second);
    parent_index_.push_back(std::move(idx));
    compiled_.emplace_back(it->second);
  }
}

const Formula& Adf::condition(const ArgumentId& s) const {
  return conditions_[statements_.require_index(s)];
}

std::span<const ArgumentId> Adf::parents(const ArgumentId& s) const {
  return compiled_[statements_.require_index(s)].atoms();
}

std::vector<std::pair<ArgumentId, ArgumentId>> Adf::links() const {
  std::vector<std::pair<ArgumentId, ArgumentId>> out;
  for (std::size_t i = 0; i < statements_.size(); ++i) {
    for (const auto& b : compiled_[i].atoms()) out.emplace_back(b, statements_[i]);
  }
  return out;
}

LinkType link_type(const Adf& d, const ArgumentId& b, const ArgumentId& a) {
  auto parents = d.parents(a);
  if (!std::binary_search(parents.begin(), parents.end(), b)) {
    throw PreconditionError("(" + b.str() + "," + a.str() + ") is not a link");
  }
  return link_type(d.condition(a), b);
}

bool is_support_free(const Adf& d) {
  for (const auto& [b, a] : d.links()) {
    auto t = link_type(d, b, a);
    if (t != LinkType::Attacking && t != LinkType::Redundant) return false;
  }
  return true;
}

namespace {

std::vector<Value3> gamma_values(const Adf& d, std::span<const Value3> v) {
  std::vector<Value3> out(v.size());
  for (std::size_t s = 0; s < v.size(); ++s) {
    std::uint64_t fixed = 0;
    std::uint64_t values = 0;
    auto parents = d.parent_indices(s);
    for (std::size_t j = 0; j < parents.size(); ++j) {
      const Value3 x = v[parents[j]];
      if (x == Value3::U) continue;
      fixed |= std::uint64_t{1} << j;
      if (x == Value3::T) values |= std::uint64_t{1} << j;
    }
    switch (d.compiled(s).classify(fixed, values)) {
      case Classification::Tautology: out[s] = Value3::T; break;
      case Classification::Unsatisfiable: out[s] = Value3::F; break;
      case Classification::Contingent: out[s] = Value3::U; break;
    }
  }
  return out;
}

bool leq_i(std::span<const Value3> v, std::span<const Value3> w) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != Value3::U && v[i] != w[i]) return false;
  }
  return true;
}

bool conflict_free(const Adf& d, std::span<const Value3> v) {
  auto g = gamma_values(d, v);
  for (std::size_t s = 0; s < v.size(); ++s) {
    // t needs a satisfiable phi^v, f an unsatisfiable one
    if (v[s] == Value3::T && g[s] == Value3::F) return false;
    if (v[s] == Value3::F && g[s] != Value3::F) return false;
  }
  return true;
}

bool admissible(const Adf& d, std::span<const Value3> v) { return leq_i(v, gamma_values(d, v)); }

bool complete(const Adf& d, std::span<const Value3> v) {
  auto g = gamma_values(d, v);
  return std::equal(v.begin(), v.end(), g.begin(), g.end());
}

bool model(const Adf& d, std::span<const Value3> v) {
  return std::find(v.begin(), v.end(), Value3::U) == v.end() && complete(d, v);
}

std::vector<Value3> grounded_values(const Adf& d) {
  std::vector<Value3> v(d.statements().size(), Value3::U);
  for (;;) {
    auto next = gamma_values(d, v);
    if (next == v) return v;
    v = std::move(next);
  }
}

Reduct make_reduct(const Adf& d, std::span<const Value3> v) {
  std::map<ArgumentId, bool> falsified;
  std::vector<ArgumentId> kept;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Value3::F) falsified.emplace(d.statements()[i], false);
    if (v[i] == Value3::T) kept.push_back(d.statements()[i]);
  }
  std::map<ArgumentId, Formula> conditions;
  for (const auto& s : kept) conditions.emplace(s, substitute(d.condition(s), falsified));
  Adf r(kept, std::move(conditions));
  Interpretation w(r.statements(), grounded_values(r));
  return Reduct{std::move(r), std::move(w)};
}

bool stable(const Adf& d, std::span<const Value3> v) {
  if (!model(d, v)) return false;
  Reduct r = make_reduct(d, v);
  // statements of the reduct are exactly v^t, so w^t = v^t iff w is all-t
  return !r.grounded.has(Value3::U) && !r.grounded.has(Value3::F);
}

using Pred = bool (*)(const Adf&, std::span<const Value3>);

std::vector<std::vector<Value3>> filter3(const Adf& d, Pred pred) {
  std::vector<std::vector<Value3>> out;
  for_each_assignment(d.statements().size(), [&](std::span<const Value3> v) {
    if (pred(d, v)) out.emplace_back(v.begin(), v.end());
  });
  return out;
}

std::vector<std::vector<Value3>> filter2(const Adf& d, Pred pred) {
  std::vector<std::vector<Value3>> out;
  for_each_two_valued(d.statements().size(), [&](std::span<const Value3> v) {
    if (pred(d, v)) out.emplace_back(v.begin(), v.end());
  });
  return out;
}

std::vector<std::vector<Value3>> preferred(const Adf& d) {
  auto adm = filter3(d, admissible);
  auto decided = [](const std::vector<Value3>& v) {
    return std::count_if(v.begin(), v.end(), [](Value3 x) { return x != Value3::U; });
  };
  // a strictly larger interpretation decides more statements, so it is
  // always seen first
  std::stable_sort(adm.begin(), adm.end(),
                   [&](const auto& a, const auto& b) { return decided(a) > decided(b); });
  std::vector<std::vector<Value3>> maximal;
  for (auto& v : adm) {
    bool below = std::any_of(maximal.begin(), maximal.end(),
                             [&](const auto& m) { return leq_i(v, m); });
    if (!below) maximal.push_back(std::move(v));
  }
  return maximal;
}

std::vector<std::vector<Value3>> members(const Adf& d, Semantics sigma) {
  require_enumerable(d.statements().size(), "ADF statement set");
  switch (sigma) {
    case Semantics::Cf: return filter3(d, conflict_free);
    case Semantics::Adm: return filter3(d, admissible);
    case Semantics::Com: return filter3(d, complete);
    case Semantics::Grd: return {grounded_values(d)};
    case Semantics::Prf: return preferred(d);
    case Semantics::Mod: return filter2(d, model);
    case Semantics::Stb: return filter2(d, stable);
  }
  return {};
}

void require_domain(const Adf& d, const Interpretation& v) {
  if (!(v.domain() == d.statements())) {
    throw DomainError("interpretation domain differs from the ADF statements");
  }
}

}  // namespace

Interpretation gamma(const Adf& d, const Interpretation& v) {
  require_domain(d, v);
  return Interpretation(d.statements(), gamma_values(d, v.values()));
}

bool check_interpretation(const Adf& d, const Interpretation& v, Semantics sigma) {
  require_domain(d, v);
  auto values = v.values();
  switch (sigma) {
    case Semantics::Cf: return conflict_free(d, values);
    case Semantics::Adm: return admissible(d, values);
    case Semantics::Com: return complete(d, values);
    case Semantics::Grd: return std::ranges::equal(values, grounded_values(d));
    case Semantics::Prf: return enumerate_adf(d, sigma).contains(v);
    case Semantics::Mod: return model(d, values);
    case Semantics::Stb: return stable(d, values);
  }
  return false;
}

InterpretationSet enumerate_adf(const Adf& d, Semantics sigma) {
  InterpretationSet out(d.statements());
  for (auto& v : members(d, sigma)) out.insert(Interpretation(d.statements(), std::move(v)));
  return out;
}

Interpretation grounded(const Adf& d) {
  return Interpretation(d.statements(), grounded_values(d));
}

Reduct reduct(const Adf& d, const Interpretation& v) {
  require_domain(d, v);
  if (!model(d, v.values())) {
    throw PreconditionError("the reduct is only defined for two-valued models");
  }
  return make_reduct(d, v.values());
}

bool sfadf_mod_eq_stb(const Adf& d) {
  if (!is_support_free(d)) throw PreconditionError("ADF is not support-free");
  return enumerate_adf(d, Semantics::Mod) == enumerate_adf(d, Semantics::Stb);
}

}  // namespace setadf
