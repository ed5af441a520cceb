#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "setadf/formula.hpp"

using namespace setadf;
using namespace setadf::testing;

namespace {

std::map<ArgumentId, bool> w(std::initializer_list<std::pair<const char*, bool>> xs) {
  std::map<ArgumentId, bool> out;
  for (auto [n, b] : xs) out.emplace(ArgumentId(n), b);
  return out;
}

Formula or2(Formula x, Formula y) { return Formula::disj({std::move(x), std::move(y)}); }
Formula and2(Formula x, Formula y) { return Formula::conj({std::move(x), std::move(y)}); }

NegCnf cnf(std::initializer_list<std::initializer_list<std::string_view>> clauses) {
  std::vector<NegCnf::Clause> out;
  for (auto cl : clauses) out.push_back(make_ids(cl));
  return NegCnf(out);
}

}  // namespace

TEST(Eval2, Examples) {
  EXPECT_FALSE(eval2(or2(nota("a"), nota("b")), w({{"a", true}, {"b", true}})));
  EXPECT_TRUE(eval2(Formula::top(), w({{"a", false}})));
  Formula f = or2(atom("b"), nota("c"));
  EXPECT_TRUE(eval2(f, w({{"b", false}, {"c", false}})));
  for (const auto& x : oracle::assignments(f.atoms())) EXPECT_EQ(eval2(f, x), oracle::eval(f, x));
  EXPECT_THROW(eval2(f, w({{"b", true}})), InvalidInput);
}

TEST(PartialValuation, SubstitutesDecidedAtomsOnly) {
  Domain ab(make_ids({"a", "b"}));
  EXPECT_EQ(partial_valuation(or2(nota("a"), nota("b")), interp(ab, "tu")).to_string(),
            "or(neg(c(v)),neg(b))");
  Domain b(make_ids({"b"}));
  EXPECT_EQ(partial_valuation(nota("b"), interp(b, "f")).to_string(), "neg(c(f))");
  Domain bc(make_ids({"b", "c"}));
  Formula f = or2(atom("b"), nota("c"));
  EXPECT_EQ(partial_valuation(f, interp(bc, "uu")), f);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(or2(Formula::neg(Formula::top()), nota("b"))), Classification::Contingent);
  EXPECT_EQ(classify(Formula::bot()), Classification::Unsatisfiable);
  EXPECT_EQ(classify(or2(atom("a"), nota("a"))), Classification::Tautology);
}

TEST(Classify, SizeCap) {
  std::vector<Formula> xs;
  for (const auto& a : names(13)) xs.push_back(Formula::atom(a));
  EXPECT_THROW(classify(Formula::conj(xs)), SizeError);
  xs.pop_back();
  EXPECT_NO_THROW(classify(Formula::conj(xs)));
}

TEST(LinkType, Examples) {
  EXPECT_EQ(link_type(or2(nota("a"), nota("b")), ArgumentId("a")), LinkType::Attacking);
  EXPECT_EQ(link_type(or2(atom("b"), nota("c")), ArgumentId("b")), LinkType::Supporting);
  Formula xnor = or2(and2(atom("a"), atom("b")), and2(nota("a"), nota("b")));
  EXPECT_EQ(link_type(xnor, ArgumentId("a")), LinkType::Dependent);
  // an atom that cannot matter is both
  Formula junk = or2(atom("b"), and2(atom("a"), nota("a")));
  EXPECT_EQ(link_type(junk, ArgumentId("a")), LinkType::Redundant);
  EXPECT_THROW(link_type(nota("a"), ArgumentId("z")), PreconditionError);
}

TEST(NegativeCnf, Examples) {
  EXPECT_EQ(to_negative_cnf(and2(or2(nota("a"), atom("b")), nota("b"))), cnf({{"a"}, {"b"}}));
  EXPECT_EQ(to_negative_cnf(nota("a")), cnf({{"a"}}));
  EXPECT_EQ(to_negative_cnf(or2(nota("a"), nota("b"))), cnf({{"a", "b"}}));
  EXPECT_TRUE(to_negative_cnf(Formula::top()).is_top());
}

TEST(NegativeCnf, Errors) {
  EXPECT_THROW(to_negative_cnf(Formula::bot()), NotRepresentable);
  EXPECT_THROW(to_negative_cnf(and2(atom("a"), nota("a"))), NotRepresentable);
  EXPECT_THROW(to_negative_cnf(atom("a")), PreconditionError);
  EXPECT_THROW(to_negative_cnf(or2(atom("b"), nota("c"))), PreconditionError);
}

TEST(NegativeCnf, TautologicalClauseIsDropped) {
  // (t or not t) and not b: deleting the positive t alone would leave not t
  Formula f = and2(or2(atom("t"), nota("t")), nota("b"));
  EXPECT_EQ(to_negative_cnf(f), cnf({{"b"}}));
}

TEST(NegCnfType, MinimizedDropsSupersets) {
  NegCnf c = cnf({{"a", "b"}, {"a"}, {"a", "b", "c"}, {"b", "c"}});
  EXPECT_EQ(c.minimized(), cnf({{"a"}, {"b", "c"}}));
  EXPECT_FALSE(c.is_minimal());
  EXPECT_TRUE(c.minimized().is_minimal());
  EXPECT_THROW(NegCnf({NegCnf::Clause{}}), InvalidInput);
  EXPECT_EQ(cnf({{"b", "a", "a"}}).clauses().front(), make_ids({"a", "b"}));
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(or2(nota("a"), nota("a")), nota("a")));
  EXPECT_FALSE(equivalent(Formula::bot(), nota("a")));
  EXPECT_TRUE(equivalent(and2(or2(nota("a"), atom("b")), nota("b")), and2(nota("a"), nota("b"))));
}

TEST(FormulaText, ConcreteSyntax) {
  Formula f = Formula::imp(Formula::iff(atom("a"), Formula::top()), Formula::bot());
  EXPECT_EQ(f.to_string(), "imp(iff(a,c(v)),c(f))");
  EXPECT_EQ(f.atoms(), make_ids({"a"}));
  EXPECT_THROW(Formula::conj({}), InvalidInput);
  EXPECT_THROW(Formula::disj({}), InvalidInput);
}

// --- properties -----------------------------------------------------------

TEST(FormulaProperty, LibraryAgreesWithTruthTableOracle) {
  Rng rng(21);
  for (int i = 0; i < 400; ++i) {
    auto atoms = names(1 + i % 5);
    Formula f = random_formula(rng, atoms, 4);
    ASSERT_EQ(classify(f), oracle::classify(f)) << f.to_string();
    for (const auto& a : f.atoms()) {
      ASSERT_EQ(link_type(f, a), oracle::link_type(f, a)) << f.to_string() << " " << a.str();
    }
    Formula g = random_formula(rng, atoms, 3);
    ASSERT_EQ(equivalent(f, g), oracle::equivalent(f, g));
  }
}

TEST(FormulaProperty, TautologousPartialValuationHoldsOnCompletions) {
  Rng rng(22);
  std::uniform_int_distribution<int> val(0, 2);
  for (int i = 0; i < 300; ++i) {
    Domain d(names(1 + i % 6));
    Formula f = random_formula(rng, d.ids(), 4);
    std::vector<Value3> vals(d.size());
    for (auto& x : vals) x = static_cast<Value3>(val(rng));
    Interpretation v(d, vals);
    Classification c = classify(partial_valuation(f, v));
    bool all_true = true;
    bool all_false = true;
    for (const auto& x : oracle::assignments(d.ids())) {
      bool completes = true;
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (v[k] == Value3::T && !x.at(d[k])) completes = false;
        if (v[k] == Value3::F && x.at(d[k])) completes = false;
      }
      if (!completes) continue;
      (oracle::eval(f, x) ? all_false : all_true) = false;
    }
    if (c == Classification::Tautology) ASSERT_TRUE(all_true);
    if (c == Classification::Unsatisfiable) ASSERT_TRUE(all_false);
    if (c == Classification::Contingent) ASSERT_TRUE(!all_true && !all_false);
  }
}

TEST(FormulaProperty, NegativeCnfOnRandomAttackingConditions) {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    Formula f = random_attacking_formula(rng, names(1 + i % 4));
    NegCnf c = to_negative_cnf(f);
    ASSERT_TRUE(c.is_minimal());
    for (const auto& cl : c.clauses()) ASSERT_FALSE(cl.empty());
    ASSERT_TRUE(oracle::equivalent(c.to_formula(), f)) << f.to_string();
  }
}

TEST(FormulaProperty, LinkTypeStableUnderEquivalentRewrites) {
  Rng rng(24);
  for (int i = 0; i < 300; ++i) {
    auto atoms = names(1 + i % 4);
    Formula f = random_formula(rng, atoms, 3);
    auto fa = f.atoms();
    if (fa.empty()) continue;
    // same atom set, same meaning
    std::vector<Formula> rewrites{
        Formula::neg(Formula::neg(f)),
        Formula::iff(f, Formula::top()),
        Formula::conj({f, Formula::disj({Formula::atom(fa[0]), Formula::neg(Formula::atom(fa[0]))})}),
    };
    for (const auto& g : rewrites) {
      ASSERT_EQ(g.atoms(), fa);
      for (const auto& a : fa) ASSERT_EQ(link_type(f, a), link_type(g, a));
    }
  }
}

TEST(FormulaProperty, RedundantIffAttackingAndSupporting) {
  Rng rng(25);
  for (int i = 0; i < 300; ++i) {
    Formula f = random_formula(rng, names(3), 3);
    for (const auto& a : f.atoms()) {
      bool att = true;
      bool sup = true;
      for (auto x : oracle::assignments(f.atoms())) {
        bool before = oracle::eval(f, x);
        x[a] = true;
        bool after = oracle::eval(f, x);
        if (!before && after) att = false;
        if (before && !after) sup = false;
      }
      ASSERT_EQ(link_type(f, a) == LinkType::Redundant, att && sup);
    }
  }
}
