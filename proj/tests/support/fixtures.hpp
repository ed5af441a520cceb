#pragma once

#include <map>
#include <string>

#include "setadf/adf.hpp"
#include "setadf/model.hpp"

namespace setadf::testing {

/// ({a,b,c}, {({a,b},c), ({a,c},b)})
inline Setaf joint_attacks() {
  auto ids = make_ids({"a", "b", "c"});
  return Setaf(ids, {Attack{make_ids({"a", "b"}), ArgumentId("c")},
                     Attack{make_ids({"a", "c"}), ArgumentId("b")}});
}

/// phi_a = neg b, phi_b = b or neg c, phi_c = neg a or neg b
inline Adf mixed_links() {
  auto atom = [](const char* n) { return Formula::atom(std::string(n)); };
  std::map<ArgumentId, Formula> c;
  c.emplace(ArgumentId("a"), Formula::neg(atom("b")));
  c.emplace(ArgumentId("b"), Formula::disj({atom("b"), Formula::neg(atom("c"))}));
  c.emplace(ArgumentId("c"),
            Formula::disj({Formula::neg(atom("a")), Formula::neg(atom("b"))}));
  return Adf(make_ids({"a", "b", "c"}), std::move(c));
}

/// Values in domain order, one character each: i/o/u for labellings.
inline Labelling lab(const Domain& d, std::string_view code) {
  std::vector<Value3> v;
  for (char c : code) v.push_back(c == 'i' ? Value3::In : c == 'o' ? Value3::Out : Value3::Undec);
  return Labelling(d, v);
}

/// Values in domain order, one character each: t/f/u.
inline Interpretation interp(const Domain& d, std::string_view code) {
  std::vector<Value3> v;
  for (char c : code) v.push_back(c == 't' ? Value3::T : c == 'f' ? Value3::F : Value3::U);
  return Interpretation(d, v);
}

inline LabellingSet labs(const Domain& d, std::initializer_list<std::string_view> codes) {
  LabellingSet s(d);
  for (auto c : codes) s.insert(lab(d, c));
  return s;
}

inline InterpretationSet interps(const Domain& d, std::initializer_list<std::string_view> codes) {
  InterpretationSet s(d);
  for (auto c : codes) s.insert(interp(d, c));
  return s;
}

inline Formula atom(const char* n) { return Formula::atom(std::string(n)); }
inline Formula nota(const char* n) { return Formula::neg(atom(n)); }

inline Adf make_adf(std::initializer_list<std::pair<const char*, Formula>> conds) {
  std::vector<ArgumentId> ids;
  std::map<ArgumentId, Formula> c;
  for (const auto& [n, f] : conds) {
    ids.emplace_back(n);
    c.emplace(ArgumentId(n), f);
  }
  return Adf(ids, std::move(c));
}

}  // namespace setadf::testing
