#include "generators.hpp"

#include <map>
#include <set>

namespace setadf::testing {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::vector<ArgumentId> sample(Rng& rng, const std::vector<ArgumentId>& pool, std::size_t k) {
  std::vector<ArgumentId> copy = pool;
  std::shuffle(copy.begin(), copy.end(), rng);
  copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(std::min(k, copy.size())), copy.end());
  return copy;
}

Formula neg_lit(const ArgumentId& a) { return Formula::neg(Formula::atom(a)); }

/// Anti-monotone formula built from negative literals with and/or, written
/// through a few equivalent disguises.
Formula disguised(Rng& rng, const std::vector<ArgumentId>& atoms, int depth) {
  if (depth == 0 || coin(rng, 0.3)) {
    const auto& a = atoms[pick(rng, 0, atoms.size() - 1)];
    switch (pick(rng, 0, 3)) {
      case 0: return neg_lit(a);
      case 1: return Formula::imp(Formula::atom(a), Formula::bot());
      case 2: return Formula::neg(Formula::neg(neg_lit(a)));
      default: return Formula::iff(Formula::atom(a), Formula::bot());
    }
  }
  Formula x = disguised(rng, atoms, depth - 1);
  Formula y = disguised(rng, atoms, depth - 1);
  switch (pick(rng, 0, 5)) {
    case 0: return Formula::conj({x, y});
    case 1: return Formula::disj({x, y});
    // not-x implies y  ==  x or y
    case 2: return Formula::imp(Formula::neg(x), y);
    // De Morgan
    case 3: return Formula::neg(Formula::disj({Formula::neg(x), Formula::neg(y)}));
    case 4: return Formula::conj({x, Formula::disj({y, Formula::top()})});
    default: {
      const auto& a = atoms[pick(rng, 0, atoms.size() - 1)];
      // x or (a and not a) keeps a as a redundant parent
      return Formula::disj({x, Formula::conj({Formula::atom(a), neg_lit(a)})});
    }
  }
}

}  // namespace

std::vector<ArgumentId> names(std::size_t n) {
  std::vector<ArgumentId> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back("a" + std::to_string(i));
  return out;
}

Setaf random_setaf(Rng& rng, std::size_t max_args, std::size_t max_attacks) {
  auto args = names(pick(rng, 1, max_args));
  std::set<Attack> attacks;
  const std::size_t want = pick(rng, 0, max_attacks);
  for (std::size_t tries = 0; attacks.size() < want && tries < 10 * max_attacks + 10; ++tries) {
    auto attackers = sample(rng, args, pick(rng, 1, std::min<std::size_t>(3, args.size())));
    std::sort(attackers.begin(), attackers.end());
    attacks.insert(Attack{attackers, args[pick(rng, 0, args.size() - 1)]});
  }
  return Setaf(args, {attacks.begin(), attacks.end()});
}

Adf random_sfadf(Rng& rng, std::size_t max_statements) {
  auto stmts = names(pick(rng, 1, max_statements));
  std::map<ArgumentId, Formula> conditions;
  for (const auto& s : stmts) {
    const double r = std::uniform_real_distribution<double>(0, 1)(rng);
    if (r < 0.15) {
      conditions.emplace(s, Formula::bot());
    } else if (r < 0.25) {
      conditions.emplace(s, Formula::top());
    } else {
      std::vector<NegCnf::Clause> clauses;
      const std::size_t k = pick(rng, 1, 3);
      for (std::size_t i = 0; i < k; ++i) {
        clauses.push_back(sample(rng, stmts, pick(rng, 1, std::min<std::size_t>(3, stmts.size()))));
      }
      conditions.emplace(s, NegCnf(std::move(clauses)).to_formula());
    }
  }
  return Adf(stmts, std::move(conditions));
}

Formula random_formula(Rng& rng, const std::vector<ArgumentId>& atoms, int depth) {
  if (depth == 0 || coin(rng, 0.25)) {
    switch (pick(rng, 0, 9)) {
      case 0: return Formula::top();
      case 1: return Formula::bot();
      default: return Formula::atom(atoms[pick(rng, 0, atoms.size() - 1)]);
    }
  }
  auto sub = [&] { return random_formula(rng, atoms, depth - 1); };
  switch (pick(rng, 0, 5)) {
    case 0: return Formula::neg(sub());
    case 1: {
      std::vector<Formula> xs;
      for (std::size_t i = 0, k = pick(rng, 1, 3); i < k; ++i) xs.push_back(sub());
      return Formula::conj(std::move(xs));
    }
    case 2: {
      std::vector<Formula> xs;
      for (std::size_t i = 0, k = pick(rng, 1, 3); i < k; ++i) xs.push_back(sub());
      return Formula::disj(std::move(xs));
    }
    case 3: return Formula::imp(sub(), sub());
    case 4: return Formula::iff(sub(), sub());
    default: return Formula::neg(Formula::atom(atoms[pick(rng, 0, atoms.size() - 1)]));
  }
}

Formula random_attacking_formula(Rng& rng, const std::vector<ArgumentId>& atoms) {
  for (;;) {
    Formula f = coin(rng, 0.75) ? disguised(rng, atoms, static_cast<int>(pick(rng, 1, 3)))
                                : random_formula(rng, atoms, 3);
    if (f.atoms().empty()) continue;
    if (classify(f) == Classification::Unsatisfiable) continue;
    bool attacking = true;
    for (const auto& a : f.atoms()) {
      auto t = link_type(f, a);
      attacking = attacking && (t == LinkType::Attacking || t == LinkType::Redundant);
    }
    if (attacking) return f;
  }
}

Adf random_adf(Rng& rng, std::size_t max_statements, int depth) {
  auto stmts = names(pick(rng, 1, max_statements));
  std::map<ArgumentId, Formula> conditions;
  for (const auto& s : stmts) conditions.emplace(s, random_formula(rng, stmts, depth));
  return Adf(stmts, std::move(conditions));
}

}  // namespace setadf::testing
