#include "setadf/setaf_semantics.hpp"

#include "setadf/adf.hpp"
#include "setadf/translation.hpp"

namespace setadf {

namespace {

using Mask = std::uint32_t;

struct MaskAttack {
  Mask attackers;
  std::size_t target;
};

/// Bitmask view of a framework; bit i stands for arguments()[i].
struct Compiled {
  std::size_t n;
  std::vector<std::vector<Mask>> incoming;  // attacker masks per target

  explicit Compiled(const Setaf& f) : n(f.arguments().size()), incoming(n) {
    for (const auto& a : f.indexed_attacks()) {
      Mask m = 0;
      for (auto b : a.attackers) m |= Mask{1} << b;
      incoming[a.target].push_back(m);
    }
  }
};

struct Parts {
  Mask in = 0;
  Mask out = 0;
};

Parts parts_of(std::span<const Value3> values) {
  Parts p;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == Value3::In) p.in |= Mask{1} << i;
    if (values[i] == Value3::Out) p.out |= Mask{1} << i;
  }
  return p;
}

bool conflict_free(const Compiled& c, Parts p) {
  for (std::size_t a = 0; a < c.n; ++a) {
    const bool in = (p.in >> a) & 1U;
    const bool out = (p.out >> a) & 1U;
    if (!in && !out) continue;
    bool fully_in = false;
    for (Mask att : c.incoming[a]) {
      if ((att & p.in) == att) {
        fully_in = true;
        break;
      }
    }
    // (i) no attack with all attackers and the target in
    if (in && fully_in) return false;
    // (ii) out needs an attack whose attackers are all in
    if (out && !fully_in) return false;
  }
  return true;
}

bool every_attack_has_out_attacker(const Compiled& c, Parts p, std::size_t a) {
  for (Mask att : c.incoming[a]) {
    if ((att & p.out) == 0) return false;
  }
  return true;
}

bool admissible(const Compiled& c, Parts p) {
  if (!conflict_free(c, p)) return false;
  for (std::size_t a = 0; a < c.n; ++a) {
    if (((p.in >> a) & 1U) && !every_attack_has_out_attacker(c, p, a)) return false;
  }
  return true;
}

bool complete(const Compiled& c, Parts p) {
  if (!conflict_free(c, p)) return false;
  for (std::size_t a = 0; a < c.n; ++a) {
    const bool in = (p.in >> a) & 1U;
    const bool out = (p.out >> a) & 1U;
    if (in != every_attack_has_out_attacker(c, p, a)) return false;
    bool attacked = false;
    for (Mask att : c.incoming[a]) {
      if ((att & p.in) == att) {
        attacked = true;
        break;
      }
    }
    if (out != attacked) return false;
  }
  return true;
}

struct Candidate {
  std::vector<Value3> values;
  Parts parts;
};

std::vector<Candidate> filter(const Compiled& c, bool (*pred)(const Compiled&, Parts)) {
  std::vector<Candidate> out;
  for_each_assignment(c.n, [&](std::span<const Value3> values) {
    Parts p = parts_of(values);
    if (pred(c, p)) out.push_back({{values.begin(), values.end()}, p});
  });
  return out;
}

bool stable(const Compiled& c, Parts p) {
  const Mask all = c.n == 0 ? 0 : (c.n == 32 ? ~Mask{0} : (Mask{1} << c.n) - 1);
  return (p.in | p.out) == all && conflict_free(c, p);
}

bool strict_subset(Mask a, Mask b) { return a != b && (a & b) == a; }

/// Complete candidates whose in-part is subset-minimal (grd) or maximal (prf).
std::vector<Candidate> extremal_complete(const Compiled& c, bool maximal) {
  auto com = filter(c, complete);
  std::vector<Candidate> out;
  for (const auto& x : com) {
    bool dominated = false;
    for (const auto& y : com) {
      if (maximal ? strict_subset(x.parts.in, y.parts.in)
                  : strict_subset(y.parts.in, x.parts.in)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(x);
  }
  return out;
}

std::vector<Candidate> candidates(const Setaf& f, Semantics sigma) {
  require_enumerable(f.arguments().size(), "SETAF argument set");
  Compiled c(f);
  switch (sigma) {
    case Semantics::Cf: return filter(c, conflict_free);
    case Semantics::Adm: return filter(c, admissible);
    case Semantics::Com: return filter(c, complete);
    case Semantics::Stb: return filter(c, stable);
    case Semantics::Prf: return extremal_complete(c, true);
    case Semantics::Grd: {
      auto grd = extremal_complete(c, false);
      if (grd.size() != 1) {
        throw InternalError("SETAF has " + std::to_string(grd.size()) +
                            " subset-minimal complete labellings");
      }
      return grd;
    }
    case Semantics::Mod: break;
  }
  throw PreconditionError("semantics 'mod' is not defined for SETAFs");
}

}  // namespace

bool check_labelling(const Setaf& f, const Labelling& lambda, Semantics sigma) {
  if (!(lambda.domain() == f.arguments())) {
    throw DomainError("labelling domain differs from the SETAF arguments");
  }
  require_enumerable(f.arguments().size(), "SETAF argument set");
  Compiled c(f);
  Parts p = parts_of(lambda.values());
  switch (sigma) {
    case Semantics::Cf: return conflict_free(c, p);
    case Semantics::Adm: return admissible(c, p);
    case Semantics::Com: return complete(c, p);
    case Semantics::Stb: return stable(c, p);
    case Semantics::Grd:
    case Semantics::Prf: return enumerate(f, sigma).contains(lambda);
    case Semantics::Mod: break;
  }
  throw PreconditionError("semantics 'mod' is not defined for SETAFs");
}

LabellingSet enumerate(const Setaf& f, Semantics sigma) {
  LabellingSet out(f.arguments());
  for (auto& cand : candidates(f, sigma)) {
    out.insert(Labelling(f.arguments(), std::move(cand.values)));
  }
  return out;
}

Labelling grounded_labelling(const Setaf& f) {
  auto grd = candidates(f, Semantics::Grd);
  return Labelling(f.arguments(), std::move(grd.front().values));
}

bool grounded_crosscheck(const Setaf& f) {
  Adf d = setaf_to_setadf(f).to_adf();
  return lab_to_int(grounded_labelling(f)) == grounded(d);
}

}  // namespace setadf
