#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "setadf/model.hpp"

using namespace setadf;
using namespace setadf::testing;

namespace {

Domain abc() { return Domain(make_ids({"a", "b", "c"})); }

}  // namespace

TEST(ArgumentId, AcceptsTokenCharactersOnly) {
  EXPECT_NO_THROW(ArgumentId("a_1B"));
  EXPECT_THROW(ArgumentId(""), InvalidInput);
  EXPECT_THROW(ArgumentId("a-b"), InvalidInput);
  EXPECT_THROW(ArgumentId("a b"), InvalidInput);
  EXPECT_NE(ArgumentId("a"), ArgumentId("A"));
}

TEST(Domain, SortsAndRejectsDuplicates) {
  Domain d(make_ids({"c", "a", "b"}));
  EXPECT_EQ(d[0].str(), "a");
  EXPECT_EQ(d[2].str(), "c");
  EXPECT_EQ(d.index_of(ArgumentId("b")), 1u);
  EXPECT_FALSE(d.index_of(ArgumentId("z")));
  EXPECT_THROW(Domain(make_ids({"a", "a"})), InvalidInput);
  EXPECT_THROW(d.require_index(ArgumentId("z")), DomainError);
}

TEST(Labelling, FromPartsRequiresPartition) {
  Domain d = abc();
  auto l = Labelling::from_parts(d, make_ids({"a"}), make_ids({"b"}), make_ids({"c"}));
  EXPECT_EQ(l, lab(d, "iou"));
  EXPECT_THROW(Labelling::from_parts(d, make_ids({"a"}), make_ids({"a"}), make_ids({"b", "c"})),
               InvalidInput);
  EXPECT_THROW(Labelling::from_parts(d, make_ids({"a"}), make_ids({"b"}), {}), InvalidInput);
  EXPECT_THROW(Labelling::from_parts(d, make_ids({"z"}), {}, {}), DomainError);
}

TEST(InfoCompare, AllUndecIsBelow) {
  Domain d(make_ids({"a", "b"}));
  EXPECT_EQ(info_compare(interp(d, "uu"), interp(d, "tf")), InfoOrder::LessEqual);
  EXPECT_EQ(info_compare(interp(d, "tf"), interp(d, "uu")), InfoOrder::Greater);
}

TEST(InfoCompare, IdentityIsEqual) {
  Domain d(make_ids({"a"}));
  EXPECT_EQ(info_compare(interp(d, "t"), interp(d, "t")), InfoOrder::Equal);
  EXPECT_TRUE(info_leq(interp(d, "t"), interp(d, "t")));
}

TEST(InfoCompare, NeitherRefinesTheOther) {
  Domain d(make_ids({"a", "b"}));
  EXPECT_EQ(info_compare(interp(d, "tu"), interp(d, "uf")), InfoOrder::Incomparable);
  EXPECT_EQ(info_compare(interp(d, "tu"), interp(d, "fu")), InfoOrder::Incomparable);
}

TEST(InfoCompare, DomainMismatchThrows) {
  EXPECT_THROW(info_compare(interp(Domain(make_ids({"a"})), "t"),
                            interp(Domain(make_ids({"b"})), "t")),
               DomainError);
}

TEST(Update, ReplacesOnePoint) {
  Domain d2(make_ids({"a", "b"}));
  EXPECT_EQ(update(interp(d2, "tf"), ArgumentId("b"), Value3::T), interp(d2, "tt"));
  Domain d1(make_ids({"a"}));
  EXPECT_EQ(update(interp(d1, "u"), ArgumentId("a"), Value3::U), interp(d1, "u"));
  EXPECT_EQ(update(interp(abc(), "tuf"), ArgumentId("c"), Value3::U), interp(abc(), "tuu"));
  EXPECT_THROW(update(interp(d1, "u"), ArgumentId("z"), Value3::T), DomainError);
}

TEST(LabToInt, RenamesValues) {
  EXPECT_EQ(lab_to_int(lab(abc(), "iou")), interp(abc(), "tfu"));
  EXPECT_EQ(lab_to_int(lab(abc(), "uuu")), interp(abc(), "uuu"));
  EXPECT_EQ(int_to_lab(interp(abc(), "tfu")), lab(abc(), "iou"));
}

TEST(LabToInt, RoundTripOnRandomLabellings) {
  Rng rng(11);
  Domain d(names(6));
  std::uniform_int_distribution<int> val(0, 2);
  for (int i = 0; i < 10000; ++i) {
    std::vector<Value3> v(d.size());
    for (auto& x : v) x = static_cast<Value3>(val(rng));
    Labelling l(d, v);
    ASSERT_EQ(int_to_lab(lab_to_int(l)), l);
    // the three parts partition the domain
    auto in = l.part(Value3::In);
    auto out = l.part(Value3::Out);
    auto undec = l.part(Value3::Undec);
    ASSERT_EQ(in.size() + out.size() + undec.size(), d.size());
    ASSERT_EQ(Labelling::from_parts(d, in, out, undec), l);
  }
}

TEST(InfoCompare, BottomBelowEveryInterpretation) {
  Domain d(names(4));
  Interpretation bottom = Interpretation::uniform(d, Value3::U);
  for_each_assignment(d.size(), [&](std::span<const Value3> v) {
    Interpretation w(d, {v.begin(), v.end()});
    auto order = info_compare(bottom, w);
    if (w == bottom) {
      EXPECT_EQ(order, InfoOrder::Equal);
    } else {
      EXPECT_EQ(order, InfoOrder::LessEqual);
    }
  });
}

TEST(ForEachAssignment, CountsAndOrder) {
  std::size_t count = 0;
  std::vector<std::vector<Value3>> seen;
  for_each_assignment(2, [&](std::span<const Value3> v) {
    ++count;
    seen.emplace_back(v.begin(), v.end());
  });
  EXPECT_EQ(count, 9u);
  EXPECT_EQ(seen.front(), (std::vector<Value3>{Value3::Undec, Value3::Undec}));
  EXPECT_EQ(seen[1], (std::vector<Value3>{Value3::Undec, Value3::Out}));
  EXPECT_EQ(seen.back(), (std::vector<Value3>{Value3::In, Value3::In}));
  count = 0;
  for_each_assignment(0, [&](std::span<const Value3>) { ++count; });
  EXPECT_EQ(count, 1u);
  count = 0;
  for_each_two_valued(3, [&](std::span<const Value3>) { ++count; });
  EXPECT_EQ(count, 8u);
}

TEST(LabellingSet, CanonicalOrderAndDomainCheck) {
  Domain d = abc();
  LabellingSet s(d);
  s.insert(lab(d, "iio"));
  s.insert(lab(d, "ioi"));
  s.insert(lab(d, "uuu"));
  EXPECT_FALSE(s.insert(lab(d, "uuu")));
  std::vector<Labelling> order(s.begin(), s.end());
  // by in-part first: {} < {a,b} < {a,c}
  EXPECT_EQ(order[0], lab(d, "uuu"));
  EXPECT_EQ(order[1], lab(d, "iio"));
  EXPECT_EQ(order[2], lab(d, "ioi"));
  EXPECT_THROW(s.insert(lab(Domain(make_ids({"a"})), "i")), DomainError);
}

TEST(ValidateSetaf, JointAttacksIsValid) {
  auto f = joint_attacks();
  EXPECT_TRUE(validate_setaf(f.arguments().ids(), f.attacks()).empty());
}

TEST(ValidateSetaf, ReportsEachViolation) {
  auto args = make_ids({"a", "b"});
  std::vector<Attack> empty{Attack{{}, ArgumentId("a")}};
  auto v = validate_setaf(args, empty);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, SetafViolationKind::EmptyAttackerSet);

  std::vector<Attack> unknown{Attack{make_ids({"x"}), ArgumentId("a")}};
  v = validate_setaf(args, unknown);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, SetafViolationKind::UnknownArgument);
  EXPECT_EQ(v[0].detail, "x");

  std::vector<Attack> dup{Attack{make_ids({"a", "b"}), ArgumentId("a")},
                          Attack{make_ids({"b", "a"}), ArgumentId("a")}};
  v = validate_setaf(args, dup);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, SetafViolationKind::DuplicateAttack);

  EXPECT_THROW(Setaf(args, dup), InvalidInput);
}

TEST(Setaf, NormalizesAttacks) {
  Setaf f(make_ids({"b", "a"}), {Attack{make_ids({"b", "a"}), ArgumentId("a")}});
  ASSERT_EQ(f.attacks().size(), 1u);
  EXPECT_EQ(f.attacks()[0].attackers, make_ids({"a", "b"}));
  EXPECT_EQ(f.attacks_on(0).size(), 1u);
  EXPECT_TRUE(f.attacks_on(1).empty());
}
