#include <gtest/gtest.h>

#include "glstar/io_json.hpp"
#include "helpers.hpp"

using namespace glstar;

TEST(Json, MooreRoundTrip) {
  auto corpus = testing_support::random_corpus(10, 8, 5);
  corpus.push_back(ab_star_dfa());
  for (const auto& m : corpus) {
    Json j = to_json(m);
    MooreMachine back = moore_from_json(parse_json_text(j.dump()));
    EXPECT_EQ(back, m);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
}

TEST(Json, MooreFormat) {
  Json j = to_json(ends_in_a_dfa());
  EXPECT_EQ(j.dump(),
            R"({"kind":"moore","alphabet":["a","b"],"states":2,"initial":0,"output":{"0":false,"1":true},)"
            R"("transitions":{"0":{"a":1,"b":0},"1":{"a":1,"b":0}}})");
}

TEST(Json, WeightedRoundTripUsesFractions) {
  Matrix ma{{Rational(1, 2), 1}, {0, Rational(-3, 4)}}, mb{{1, 0}, {2, 1}};
  WeightedAutomaton m(ab_alphabet(), {1, Rational(1, 3)}, {ma, mb}, {0, 1});
  Json j = to_json(m);
  EXPECT_NE(j.dump().find("\"-3/4\""), std::string::npos);
  WeightedAutomaton back = wfa_from_json(parse_json_text(j.dump()));
  EXPECT_EQ(back, m);
  EXPECT_EQ(wfa_value(back, "abba"), wfa_value(m, "abba"));
}

TEST(Json, SortedRoundTrip) {
  LassoOracleTarget t = inf_a_target();
  Json j = to_json(t.reference);
  SortedMachine back = sorted_from_json(parse_json_text(j.dump()));
  EXPECT_EQ(back, t.reference);
  EXPECT_TRUE(j.contains("letters"));
  EXPECT_EQ(j["letters"]["+>ω"], Json::array({"ω"}));
}

TEST(Json, RfsaRoundTrip) {
  DfaTeacher teacher(suffix_a_dfa(3));
  auto r = learn(JslDomain(ab_alphabet()), teacher);
  Json j = to_json(r.hypothesis.rfsa);
  EXPECT_EQ(rfsa_from_json(parse_json_text(j.dump())), r.hypothesis.rfsa);
}

TEST(Json, AlgebrasAndStats) {
  SemigroupTarget t = even_a_length_target();
  auto teacher = semigroup_teacher(t);
  auto r = learn(SortedDomain(t.presentation.alphabet()), teacher);
  Json s = to_json(extract_syntactic_semigroup(t.presentation, r.hypothesis), t.presentation.base());
  EXPECT_EQ(s["size"], 2);
  EXPECT_EQ(s["witnesses"], Json::array({"a", "aa"}));
  Json st = to_json(r.stats);
  EXPECT_EQ(st["equivalence_queries"], r.stats.equivalence_queries);

  LassoOracleTarget o = inf_a_target();
  auto wt = wilke_teacher(o);
  auto ro = learn(SortedDomain(o.presentation.alphabet()), wt);
  Json w = to_json(extract_wilke_algebra(o.presentation, ro.hypothesis), o.presentation.base());
  EXPECT_EQ(w["kind"], "wilke");
  EXPECT_EQ(w["plus"], 2);
  EXPECT_EQ(w["omega"], 2);
}

TEST(Json, MalformedInputIsInvalid) {
  EXPECT_THROW(parse_json_text("{"), InvalidInput);
  EXPECT_THROW(moore_from_json(parse_json_text(R"({"kind":"wfa"})")), InvalidInput);
  EXPECT_THROW(moore_from_json(parse_json_text(R"({"kind":"moore","alphabet":["a"],"states":1,"initial":0})")),
               InvalidInput);
  EXPECT_THROW(moore_from_json(parse_json_text(
                   R"({"kind":"moore","alphabet":["a"],"states":1,"initial":0,"output":{"0":true},"transitions":{"0":{"a":3}}})")),
               InvalidInput);
  EXPECT_THROW(moore_from_json(parse_json_text(
                   R"({"kind":"moore","alphabet":["a"],"states":"x","initial":0,"output":{},"transitions":{}})")),
               InvalidInput);
  EXPECT_THROW(wfa_from_json(parse_json_text(
                   R"({"kind":"wfa","alphabet":["a"],"states":1,"initial":["1/0"],"output":{"0":"1"},"transitions":{"a":[["1"]]}})")),
               InvalidInput);
  EXPECT_THROW(sorted_from_json(parse_json_text(R"({"kind":"sorted","sorts":["+"],"alphabet":["x"],"letters":{"+":["x"]}})")),
               InvalidInput);
}

TEST(Dot, RendersMachines) {
  std::string d = to_dot(ends_in_a_dfa());
  EXPECT_EQ(d.rfind("digraph", 0), 0u);
  EXPECT_NE(d.find("doublecircle"), std::string::npos);
  std::string s = to_dot(inf_a_target().reference);
  EXPECT_NE(s.find("ω"), std::string::npos);
}
