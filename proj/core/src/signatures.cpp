#include "setadf/signatures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "setadf/setaf_semantics.hpp"

namespace setadf {

bool SignatureVerdict::violates(std::string_view id) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const SignatureViolation& v) { return v.id == id; });
}

SignatureRejected::SignatureRejected(SignatureVerdict verdict)
    : PreconditionError("labelling set is outside the signature" +
                        (verdict.first() ? " (" + verdict.first()->id + ")" : std::string())),
      verdict_(std::move(verdict)) {}

namespace {

using Mask = std::uint32_t;

struct Triple {
  Mask in = 0;
  Mask out = 0;
  Mask undec = 0;
  const Labelling* source = nullptr;
};

/// Bitmask form of a labelling set plus a membership index on (in, out).
class MaskSet {
 public:
  explicit MaskSet(const LabellingSet& l) : n_(l.arguments().size()) {
    require_enumerable(n_, "labelling domain");
    for (const auto& lambda : l) {
      Triple t;
      t.source = &lambda;
      for (std::size_t i = 0; i < n_; ++i) {
        const Mask bit = Mask{1} << i;
        switch (lambda[i]) {
          case Value3::In: t.in |= bit; break;
          case Value3::Out: t.out |= bit; break;
          case Value3::Undec: t.undec |= bit; break;
        }
      }
      triples_.push_back(t);
      index_.insert(key(t.in, t.out));
    }
  }

  std::size_t n() const { return n_; }
  Mask all() const { return n_ == 0 ? 0 : (Mask{1} << n_) - 1; }
  const std::vector<Triple>& triples() const { return triples_; }
  bool empty() const { return triples_.empty(); }

  /// Is the triple (in, out, rest) a member? False for malformed triples.
  bool contains(Mask in, Mask out) const {
    if ((in & out) != 0 || ((in | out) & ~all()) != 0) return false;
    return index_.count(key(in, out)) > 0;
  }

 private:
  static std::uint64_t key(Mask in, Mask out) { return (std::uint64_t{in} << 32) | out; }

  std::size_t n_;
  std::vector<Triple> triples_;
  std::unordered_set<std::uint64_t> index_;
};

bool subset(Mask a, Mask b) { return (a & b) == a; }

/// Calls f(C) for every non-empty C subset of m; stops when f returns false.
template <class F>
bool for_each_nonempty_subset(Mask m, F&& f) {
  for (Mask c = m; c != 0; c = (c - 1) & m) {
    if (!f(c)) return false;
  }
  return true;
}

class Checker {
 public:
  Checker(const LabellingSet& l, std::string prefix) : set_(l), prefix_(std::move(prefix)) {}

  const MaskSet& set() const { return set_; }

  void fail(std::string_view number, std::string name, std::string description,
            std::vector<const Triple*> offending = {}) {
    SignatureViolation v;
    v.id = prefix_ + "." + std::string(number);
    v.name = std::move(name);
    v.description = std::move(description);
    for (const Triple* t : offending) v.labellings.push_back(*t->source);
    verdict_.violations.push_back(std::move(v));
  }

  /// Runs pred over each member; records the first one it rejects.
  template <class P>
  void each(std::string_view number, std::string name, std::string description, P&& pred) {
    for (const auto& t : set_.triples()) {
      if (!pred(t)) {
        fail(number, std::move(name), std::move(description), {&t});
        return;
      }
    }
  }

  /// Runs pred over each ordered pair (including equal members).
  template <class P>
  void pairs(std::string_view number, std::string name, std::string description, P&& pred) {
    for (const auto& a : set_.triples()) {
      for (const auto& b : set_.triples()) {
        if (!pred(a, b)) {
          if (&a == &b) {
            fail(number, std::move(name), std::move(description), {&a});
          } else {
            fail(number, std::move(name), std::move(description), {&a, &b});
          }
          return;
        }
      }
    }
  }

  SignatureVerdict finish() {
    verdict_.accepted = verdict_.violations.empty();
    return std::move(verdict_);
  }

  void out_implies_in(std::string_view number) {
    each(number, "out-implies-in", "a labelling with an out argument has no in argument",
         [](const Triple& t) { return t.out == 0 || t.in != 0; });
  }

  void pairwise_in_out(std::string_view number) {
    pairs(number, "pairwise-in-out",
          "two distinct labellings lack an argument that is in in the first and out in the "
          "second",
          [](const Triple& a, const Triple& b) { return &a == &b || (a.in & b.out) != 0; });
  }

  // For C a non-empty subset of lambda_out: lambda_in + C is not inside lambda'_in.
  void out_not_coverable(std::string_view number) {
    pairs(number, "out-not-coverable",
          "the in-part plus some out arguments of one labelling is contained in the in-part "
          "of another",
          [](const Triple& a, const Triple& b) {
            return !subset(a.in, b.in) || (a.out & b.in) == 0;
          });
  }

  bool nonempty() {
    if (!set_.empty()) return true;
    fail("empty-set", "empty-set", "the labelling set is empty");
    return false;
  }

 private:
  MaskSet set_;
  std::string prefix_;
  SignatureVerdict verdict_;
};

SignatureVerdict check_stb(const LabellingSet& l) {
  Checker c(l, "stb");
  if (c.set().empty() && c.set().n() == 0) {
    c.fail("empty-domain", "empty-domain",
           "an empty set over an empty domain is not a stable outcome: the empty framework "
           "has the empty labelling as its stable labelling");
    return c.finish();
  }
  c.each("1", "no-undec", "a labelling assigns undec",
         [](const Triple& t) { return t.undec == 0; });
  c.out_implies_in("2");
  c.pairwise_in_out("3");
  return c.finish();
}

SignatureVerdict check_prf(const LabellingSet& l) {
  Checker c(l, "prf");
  if (!c.nonempty()) return c.finish();
  c.out_implies_in("2");
  c.pairwise_in_out("3");
  return c.finish();
}

SignatureVerdict check_grd(const LabellingSet& l) {
  Checker c(l, "grd");
  if (!c.nonempty()) return c.finish();
  if (c.set().triples().size() != 1) {
    std::vector<const Triple*> all;
    for (const auto& t : c.set().triples()) all.push_back(&t);
    c.fail("1", "singleton", "the set does not contain exactly one labelling", all);
  }
  c.out_implies_in("2");
  return c.finish();
}

SignatureVerdict check_cf(const LabellingSet& l) {
  Checker c(l, "cf");
  if (!c.nonempty()) return c.finish();
  const MaskSet& s = c.set();
  c.out_implies_in("2");
  c.each("3", "in-subsets",
         "some subset C of an in-part does not occur as (C, {}, rest)", [&](const Triple& t) {
           if (!s.contains(0, 0)) return false;
           return for_each_nonempty_subset(t.in, [&](Mask sub) { return s.contains(sub, 0); });
         });
  c.each("4", "out-to-undec", "moving some out arguments to undec leaves the set",
         [&](const Triple& t) {
           return for_each_nonempty_subset(
               t.out, [&](Mask sub) { return s.contains(t.in, t.out & ~sub); });
         });
  c.pairs("5", "in-extension-merge",
          "for in-parts ordered by inclusion the merged labelling is missing",
          [&](const Triple& a, const Triple& b) {
            return !subset(a.in, b.in) || s.contains(b.in, a.out | b.out);
          });
  c.out_not_coverable("6");
  return c.finish();
}

}  // namespace

SignatureVerdict check_signature(const LabellingSet& l, Semantics sigma) {
  switch (sigma) {
    case Semantics::Stb: return check_stb(l);
    case Semantics::Prf: return check_prf(l);
    case Semantics::Cf: return check_cf(l);
    case Semantics::Grd: return check_grd(l);
    default: break;
  }
  throw PreconditionError("no signature characterization for '" +
                          std::string(semantics_name(sigma)) + "'");
}

SignatureVerdict check_adm_necessary(const LabellingSet& l) {
  Checker c(l, "adm");
  if (!c.nonempty()) return c.finish();
  const MaskSet& s = c.set();

  // union of the out-parts of all members sharing an in-part
  std::map<Mask, Mask> out_by_in;
  for (const auto& t : s.triples()) out_by_in[t.in] |= t.out;

  c.out_implies_in("2");
  c.out_not_coverable("3");
  c.pairs("4", "union-or-conflict",
          "two labellings neither attack each other nor have their union in the set",
          [&](const Triple& a, const Triple& b) {
            return (a.in & b.out) != 0 || s.contains(a.in | b.in, a.out | b.out);
          });
  c.pairs("5", "defended-extension",
          "adding defended arguments to a labelling with larger out-part leaves the set",
          [&](const Triple& a, const Triple& b) {
            if (!subset(a.out, b.out)) return true;
            const Mask avail = a.in & ~out_by_in.at(b.in);
            return for_each_nonempty_subset(
                avail, [&](Mask sub) { return s.contains(b.in | sub, b.out); });
          });
  c.pairs("6", "out-extension",
          "relabelling out arguments of a smaller labelling to out leaves the set",
          [&](const Triple& a, const Triple& b) {
            if (!subset(a.in, b.in)) return true;
            return for_each_nonempty_subset(
                a.out, [&](Mask sub) { return s.contains(b.in, b.out | sub); });
          });
  c.pairs("7", "in-out-interpolation",
          "the labelling combining a smaller in-part with a smaller out-part is missing",
          [&](const Triple& a, const Triple& b) {
            if (!subset(a.in, b.in) || !subset(b.out, a.out)) return true;
            return s.contains(a.in, b.out);
          });
  if (!s.contains(0, 0)) c.fail("8", "all-undec", "the all-undec labelling is missing");
  return c.finish();
}

Setaf realize(const LabellingSet& l, Semantics sigma, bool verify) {
  SignatureVerdict verdict = check_signature(l, sigma);
  if (!verdict.accepted) throw SignatureRejected(std::move(verdict));

  const Domain& args = l.arguments();
  MaskSet s(l);
  std::set<std::pair<Mask, std::size_t>> attacks;
  for (const auto& t : s.triples()) {
    for (std::size_t a = 0; a < s.n(); ++a) {
      const Mask bit = Mask{1} << a;
      if (t.out & bit) attacks.emplace(t.in, a);
      if ((sigma == Semantics::Prf || sigma == Semantics::Grd) && (t.undec & bit)) {
        attacks.emplace(t.in | bit, a);
      }
    }
  }
  if (sigma == Semantics::Stb && s.empty()) {
    for (std::size_t a = 0; a < s.n(); ++a) attacks.emplace(Mask{1} << a, a);
  }
  if (sigma == Semantics::Cf) {
    std::set<Mask> in_parts;
    for (const auto& t : s.triples()) in_parts.insert(t.in);
    for (Mask b = 1; b <= s.all() && b != 0; ++b) {
      if (in_parts.count(b)) continue;
      for (std::size_t a = 0; a < s.n(); ++a) {
        if (b & (Mask{1} << a)) attacks.emplace(b, a);
      }
    }
  }

  std::vector<Attack> list;
  for (auto [m, target] : attacks) {
    Attack att{{}, args[target]};
    for (std::size_t i = 0; i < s.n(); ++i) {
      if (m & (Mask{1} << i)) att.attackers.push_back(args[i]);
    }
    list.push_back(std::move(att));
  }
  Setaf f(args.ids(), std::move(list));
  if (verify && !(enumerate(f, sigma) == l)) {
    throw InternalError("realized SETAF does not reproduce the labelling set");
  }
  return f;
}

DeltaVerdict delta_classify(const Adf& d, Semantics sigma) {
  if (!is_sfadf(d)) throw PreconditionError("ADF is not support-free");
  DeltaVerdict verdict{false, enumerate_adf(d, sigma), std::nullopt, std::nullopt};
  for (const auto& v : verdict.interpretations) {
    if (!v.has(Value3::T) && v.has(Value3::F)) {
      verdict.in_delta = true;
      verdict.witness = v;
      return verdict;
    }
  }

  const Domain& stmts = d.statements();
  std::map<ArgumentId, bool> unsat;
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    if (classify(d.condition(i)) == Classification::Unsatisfiable) unsat.emplace(stmts[i], false);
  }

  // Unsatisfiable statements are f in every interpretation that reaches
  // here, so they may be read as false inside the other conditions.
  std::map<ArgumentId, NegCnf> conditions;
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    if (unsat.count(stmts[i])) continue;
    conditions.emplace(stmts[i], to_negative_cnf(substitute(d.condition(i), unsat)));
  }
  for (const auto& [a, ignored] : unsat) {
    std::vector<NegCnf::Clause> clauses{{a}};
    for (const auto& v : verdict.interpretations) {
      auto t = v.part(Value3::T);
      if (t.empty()) throw InternalError("interpretation with an f value but no t value");
      clauses.push_back({t.front()});
    }
    conditions.emplace(a, NegCnf(std::move(clauses)));
  }
  SetadfView converted = prune_to_sfadf(SetadfView(stmts.ids(), std::move(conditions)));
  if (!(enumerate_adf(converted.to_adf(), sigma) == verdict.interpretations)) {
    throw InternalError("converted SETADF changes the " + std::string(semantics_name(sigma)) +
                        " interpretations");
  }
  verdict.converted = std::move(converted);
  return verdict;
}

bool delta_shape_check(const Adf& d, Semantics sigma) {
  if (sigma != Semantics::Stb && sigma != Semantics::Mod && sigma != Semantics::Prf) {
    throw PreconditionError("shape check applies to stb, mod and prf only");
  }
  DeltaVerdict verdict = delta_classify(d, sigma);
  if (!verdict.in_delta) throw PreconditionError("interpretation set is not in delta");
  if (verdict.interpretations.size() != 1) return false;
  if (sigma == Semantics::Prf) return true;
  const auto& v = *verdict.interpretations.begin();
  return std::all_of(v.values().begin(), v.values().end(),
                     [](Value3 x) { return x == Value3::F; });
}

}  // namespace setadf
