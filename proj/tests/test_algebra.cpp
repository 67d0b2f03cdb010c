#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace glstar;

namespace {

Word w(const std::string& s) { return Alphabet::from_chars("abc").parse(s); }
Word ab(const std::string& s) { return ab_alphabet().parse(s); }

bool infinitely_many_a(const Lasso& l) { return std::find(l.loop.begin(), l.loop.end(), 0) != l.loop.end(); }

}  // namespace

TEST(Lasso, EqualityOfInfiniteWords) {
  EXPECT_TRUE(lasso_eq({ab("a"), ab("ba")}, {ab("ab"), ab("ab")}));
  EXPECT_TRUE(lasso_eq({{}, ab("aa")}, {ab("a"), ab("a")}));
  EXPECT_FALSE(lasso_eq({{}, ab("ab")}, {{}, ab("ba")}));
  EXPECT_THROW(lasso_eq({{}, {}}, {{}, ab("a")}), InvalidInput);
}

TEST(Lasso, EqualityMatchesPrefixOracle) {
  auto small = oracle::all_words(2, 2);
  auto loops = oracle::all_words(2, 3, 1);
  for (const auto& u1 : small)
    for (const auto& v1 : loops)
      for (const auto& u2 : small)
        for (const auto& v2 : loops) {
          Lasso a{u1, v1}, b{u2, v2};
          EXPECT_EQ(lasso_eq(a, b), oracle::same_infinite_word(a, b));
        }
}

TEST(Lasso, NormalizeIsCanonical) {
  Lasso n = normalize({ab("abab"), ab("abab")});
  EXPECT_TRUE(n.spoke.empty());
  EXPECT_EQ(n.loop, ab("ab"));
  EXPECT_EQ(normalize({ab("bba"), ab("ba")}), (Lasso{ab("b"), ab("ba")}));
  for (const auto& u : oracle::all_words(2, 3))
    for (const auto& v : oracle::all_words(2, 3, 1)) {
      Lasso l{u, v};
      Lasso m = normalize(l);
      EXPECT_TRUE(lasso_eq(l, m));
      EXPECT_EQ(normalize(m), m);
      EXPECT_LE(m.spoke.size(), u.size());
    }
  EXPECT_EQ(unroll({ab("b"), ab("a")}, 4), ab("baaa"));
}

TEST(Presentation, SemigroupAlphabetShape) {
  Presentation p = Presentation::semigroup(ab_alphabet());
  EXPECT_EQ(p.alphabet().sort_count(), 1u);
  EXPECT_EQ(p.alphabet().letter_count(), 4u);
  EXPECT_EQ(p.alphabet().generator_count(), 2u);
  EXPECT_FALSE(p.is_wilke());
  Presentation right = Presentation::semigroup(ab_alphabet(), false);
  EXPECT_FALSE(right.has_prepend());
  EXPECT_EQ(right.alphabet().letter_count(), 2u);
}

TEST(Presentation, WilkeAlphabetShape) {
  Presentation p = Presentation::wilke(ab_alphabet());
  EXPECT_EQ(p.alphabet().sorts(), (std::vector<std::string>{"+", "ω"}));
  EXPECT_EQ(p.alphabet().letter_count(), 5u);
  EXPECT_TRUE(p.is_wilke());
}

TEST(Presentation, InterpretsSemigroupWords) {
  Presentation p = Presentation::semigroup(ab_alphabet());
  EXPECT_EQ(interpret_semigroup_word(p, "a →a →b ←b →a"), ab("baaba"));
  EXPECT_EQ(interpret_semigroup_word(p, "a->a->b<-b->a"), ab("baaba"));
  EXPECT_EQ(interpret_semigroup_word(p, "b"), ab("b"));
  EXPECT_EQ(interpret_semigroup_word(p, "a ←a ←b"), ab("baa"));
  EXPECT_THROW(p.parse("c"), InvalidInput);
  EXPECT_THROW(p.parse("a ω"), InvalidInput);
  EXPECT_THROW(p.parse(""), InvalidInput);
}

TEST(Presentation, InterpretsWilkeWords) {
  Presentation p = Presentation::wilke(ab_alphabet());
  auto v = interpret_wilke_word(p, "a →b →a ω ←ω a ←ω a");
  ASSERT_TRUE(std::holds_alternative<Lasso>(v));
  EXPECT_TRUE(lasso_eq(std::get<Lasso>(v), {ab("aa"), ab("aba")}));
  auto ascii = interpret_wilke_word(p, "a ->b ->a omega <-omega a <-omega a");
  EXPECT_EQ(std::get<Lasso>(ascii), std::get<Lasso>(v));
  EXPECT_EQ(std::get<Word>(interpret_wilke_word(p, "b →a")), ab("ba"));
  EXPECT_THROW(p.parse("a ←ω a"), InvalidInput);
  EXPECT_THROW(interpret_wilke_word(Presentation::semigroup(ab_alphabet()), "a"), InvalidInput);
}

TEST(Presentation, FromWordAndLassoRoundTrip) {
  Presentation p = Presentation::wilke(ab_alphabet());
  for (const auto& u : oracle::all_words(2, 4, 1)) EXPECT_EQ(std::get<Word>(interpret(p, p.from_word(u))), u);
  for (const auto& u : oracle::all_words(2, 3))
    for (const auto& v : oracle::all_words(2, 3, 1)) {
      Lasso l{u, v};
      EXPECT_EQ(std::get<Lasso>(interpret(p, p.from_lasso(l))), l);
    }
  EXPECT_THROW(p.from_word({}), InvalidInput);
}

TEST(Presentation, LinearizedGeneratorsOfAbc) {
  // The four ways of building abc from one generator.
  Presentation p = Presentation::semigroup(Alphabet::from_chars("abc"));
  auto member = linearize_membership(p, [](const Word& u) { return u == w("abc"); });
  for (const char* text : {"a →b →c", "b ←a →c", "b →c ←a", "c ←b ←a"}) EXPECT_TRUE(member(p.parse(text))) << text;
  EXPECT_FALSE(member(p.parse("a →c →b")));
}

TEST(Presentation, LinearizedLassoMembership) {
  Presentation p = Presentation::wilke(ab_alphabet());
  auto member = linearize_membership(p, nullptr, infinitely_many_a);
  EXPECT_TRUE(member(p.parse("a →b ω")));
  EXPECT_FALSE(member(p.parse("b ω")));
  EXPECT_FALSE(member(p.parse("b ω ←ω a")));
  EXPECT_FALSE(member(p.parse("a →a")));
}

TEST(Syntactic, EvenLengthIsCyclicOfOrderTwo) {
  SemigroupTarget t = even_a_length_target();
  auto teacher = semigroup_teacher(t);
  auto r = learn(SortedDomain(t.presentation.alphabet()), teacher);
  FiniteSemigroup s = extract_syntactic_semigroup(t.presentation, r.hypothesis);
  EXPECT_EQ(s.size, oracle::context_classes(t.predicate, 1, 6, 6));
  EXPECT_EQ(s.size, 2u);
  std::size_t gen = r.hypothesis.initial(0);
  EXPECT_NE(s(gen, gen), gen);
  EXPECT_EQ(s(s(gen, gen), gen), gen);
  EXPECT_FALSE(associativity_violation(s));
}

TEST(Syntactic, AbPlusMatchesContextCongruence) {
  SemigroupTarget t = ab_plus_target();
  auto teacher = semigroup_teacher(t);
  auto r = learn(SortedDomain(t.presentation.alphabet()), teacher);
  FiniteSemigroup s = extract_syntactic_semigroup(t.presentation, r.hypothesis);
  EXPECT_EQ(s.size, oracle::context_classes(t.predicate, 2, 4, 6));
  EXPECT_FALSE(associativity_violation(s));
  for (std::size_t x = 0; x < s.size; ++x)
    EXPECT_EQ(s.accepting[x], t.predicate(s.witness[x]));
}

TEST(Syntactic, RandomDfasMatchTransitionSemigroup) {
  auto corpus = testing_support::random_corpus(10, 4, 31);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Presentation p = Presentation::semigroup(ab_alphabet());
    MooreMachine dfa = corpus[i];
    auto pred = [dfa](const Word& u) { return !u.empty() && run_moore(dfa, u); };
    SemigroupTarget t{p, pred, transition_semigroup_machine(dfa, p)};
    auto teacher = semigroup_teacher(t);
    auto r = learn(SortedDomain(p.alphabet()), teacher);
    FiniteSemigroup s = extract_syntactic_semigroup(p, r.hypothesis);
    ASSERT_EQ(oracle::nerode_classes(testing_support::language_of(dfa), 2, dfa.size(), dfa.size()), dfa.size());
    EXPECT_EQ(s.size, oracle::transformation_count(testing_support::graph_of(dfa))) << i;
    EXPECT_FALSE(associativity_violation(s)) << i;
  }
}

TEST(Syntactic, WilkeAlgebraOfInfinitelyManyA) {
  LassoOracleTarget t = inf_a_target();
  auto teacher = wilke_teacher(t);
  auto r = learn(SortedDomain(t.presentation.alphabet()), teacher);
  WilkeAlgebra alg = extract_wilke_algebra(t.presentation, r.hypothesis);
  auto [plus, omega] = oracle::lasso_context_classes(t.lasso, 2, 3, 2);
  EXPECT_EQ(alg.plus, plus);
  EXPECT_EQ(alg.omega, omega);
  EXPECT_EQ(wilke_law_violation(alg), "");
  for (std::size_t z = 0; z < alg.omega; ++z) EXPECT_EQ(alg.accepting[z], t.lasso(alg.omega_witness[z]));
}

TEST(Syntactic, WilkeAlgebraOfEventuallyB) {
  LassoOracleTarget t = eventually_b_target();
  auto teacher = wilke_teacher(t);
  auto r = learn(SortedDomain(t.presentation.alphabet()), teacher);
  WilkeAlgebra alg = extract_wilke_algebra(t.presentation, r.hypothesis);
  auto [plus, omega] = oracle::lasso_context_classes(t.lasso, 2, 3, 2);
  EXPECT_EQ(alg.plus, plus);
  EXPECT_EQ(alg.omega, omega);
  EXPECT_EQ(wilke_law_violation(alg), "");
}

TEST(Syntactic, LawCheckerDetectsBrokenTables) {
  FiniteSemigroup s{2, {{0, 0}, {1, 1}}, {false, true}, {}};
  EXPECT_FALSE(associativity_violation(s));
  FiniteSemigroup bad{2, {{1, 0}, {0, 0}}, {false, true}, {}};
  EXPECT_TRUE(associativity_violation(bad));
  WilkeAlgebra w{1, 2, {{0}}, {{0, 1}}, {0}, {true, false}, {}, {}};
  EXPECT_EQ(wilke_law_violation(w), "");
  w.mixed = {{1, 0}};
  EXPECT_NE(wilke_law_violation(w), "");
}

TEST(Syntactic, ExtractionRejectsMachinesThatAreNoLinearization) {
  Presentation p = Presentation::semigroup(Alphabet::from_chars("a"));
  // Remembers whether the last instruction prepended.
  SortedMachine q(p.alphabet(), {2}, {0}, {{0, 0}, {1, 1}}, {{false, true}});
  EXPECT_THROW(extract_syntactic_semigroup(p, q), ExtractionError);
  SortedMachine big(p.alphabet(), {3}, {0}, {{1, 1, 1}, {1, 1, 1}}, {{false, false, false}});
  EXPECT_THROW(extract_syntactic_semigroup(p, big), ExtractionError);
  EXPECT_THROW(extract_wilke_algebra(p, q), ExtractionError);
  EXPECT_THROW(extract_syntactic_semigroup(Presentation::semigroup(Alphabet::from_chars("a"), false), q),
               ExtractionError);
}
