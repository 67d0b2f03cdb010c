#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace glstar;
using testing_support::language_of;

namespace {

LearnOptions in_mode(CounterexampleMode mode) {
  LearnOptions o;
  o.mode = mode;
  return o;
}

/// value(w) = number of occurrences of "ab" in w.
WeightedAutomaton count_ab_wfa() {
  Matrix ma{{1, 1, 0}, {0, 0, 0}, {0, 0, 1}}, mb{{1, 0, 0}, {0, 0, 1}, {0, 0, 1}};
  return WeightedAutomaton(ab_alphabet(), {1, 0, 0}, {ma, mb}, {0, 0, 1});
}

std::size_t count_ab(const Word& w) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) n += (w[i] == 0 && w[i + 1] == 1) ? 1 : 0;
  return n;
}

}  // namespace

class WeightedLearning : public ::testing::TestWithParam<CounterexampleMode> {};

TEST_P(WeightedLearning, CountA) {
  WfaTeacher teacher(count_a_wfa());
  auto r = learn(WeightedDomain(ab_alphabet()), teacher, in_mode(GetParam()));
  auto f = [](const Word& w) { return Rational(static_cast<long>(std::count(w.begin(), w.end(), 0))); };
  EXPECT_EQ(r.hypothesis.dimension(), oracle::hankel_rank(f, 2, 3, 3));
  EXPECT_EQ(r.hypothesis.dimension(), 2u);
  for (const auto& w : oracle::all_words(2, 6)) EXPECT_EQ(wfa_value(r.hypothesis, w), f(w));
}

TEST_P(WeightedLearning, CountAb) {
  WfaTeacher teacher(count_ab_wfa());
  auto r = learn(WeightedDomain(ab_alphabet()), teacher, in_mode(GetParam()));
  auto f = [](const Word& w) { return Rational(static_cast<long>(count_ab(w))); };
  EXPECT_EQ(r.hypothesis.dimension(), oracle::hankel_rank(f, 2, 3, 3));
  EXPECT_FALSE(wfa_distinguish(r.hypothesis, count_ab_wfa()));
  EXPECT_TRUE(is_minimal(r.hypothesis));
}

TEST_P(WeightedLearning, RandomSmallAutomata) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-1, 2);
  for (int i = 0; i < 8; ++i) {
    std::size_t d = 1 + i % 3;
    auto vec = [&] {
      Vector v;
      for (std::size_t j = 0; j < d; ++j) v.push_back(entry(rng));
      return v;
    };
    auto mat = [&] {
      Matrix m;
      for (std::size_t j = 0; j < d; ++j) m.push_back(vec());
      return m;
    };
    WeightedAutomaton target(ab_alphabet(), vec(), {mat(), mat()}, vec());
    WfaTeacher teacher(target);
    auto r = learn(WeightedDomain(ab_alphabet()), teacher, in_mode(GetParam()));
    auto f = [&](const Word& w) { return wfa_value(target, w); };
    std::size_t rank = oracle::hankel_rank(f, 2, d, d);
    if (rank == 0)
      EXPECT_EQ(r.hypothesis, zero_automaton(ab_alphabet())) << "automaton " << i;
    else
      EXPECT_EQ(r.hypothesis.dimension(), rank) << "automaton " << i;
    EXPECT_FALSE(wfa_distinguish(r.hypothesis, target));
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, WeightedLearning,
                         ::testing::Values(CounterexampleMode::prefix, CounterexampleMode::suffix));

TEST(WeightedDomain, ZeroSeriesGivesZeroAutomaton) {
  WeightedAutomaton zero = zero_automaton(ab_alphabet());
  WfaTeacher teacher(zero);
  auto r = learn(WeightedDomain(ab_alphabet()), teacher);
  EXPECT_EQ(reachable_dimension(r.hypothesis), 0u);
  EXPECT_EQ(r.stats.equivalence_queries, 1u);
}

TEST(WeightedDomain, ZeroEmptyRowNeedsNewColumnInSuffixMode) {
  // count-a is 0 on ε, so the first S-row is the zero vector.
  WfaTeacher teacher(count_a_wfa());
  auto r = learn(WeightedDomain(ab_alphabet()), teacher, in_mode(CounterexampleMode::suffix));
  EXPECT_GE(r.stats.extend_t_calls, 1u);
  EXPECT_EQ(r.hypothesis.dimension(), 2u);
}

TEST(JslDomain, SuffixFamilyResidualSizes) {
  for (std::size_t n = 1; n <= 4; ++n) {
    MooreMachine target = suffix_a_dfa(n);
    DfaTeacher teacher(target);
    JslDomain domain(ab_alphabet());
    auto r = learn(domain, teacher);
    auto lang = language_of(target);
    EXPECT_EQ(r.hypothesis.rfsa.states, oracle::prime_residuals(testing_support::graph_of(target))) << n;
    EXPECT_EQ(r.hypothesis.rfsa.states, n + 1) << n;
    EXPECT_FALSE(rfsa_language_equiv(r.hypothesis.rfsa, target));
    for (const auto& w : oracle::all_words(2, 7)) EXPECT_EQ(nfa_accepts(r.hypothesis.rfsa, w), lang(w));
    EXPECT_TRUE(domain.is_minimal(r.hypothesis));
  }
}

TEST(JslDomain, RandomTargetsAgreeWithOracle) {
  auto corpus = testing_support::random_corpus(15, 7, 17);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    DfaTeacher teacher(corpus[i]);
    auto r = learn(JslDomain(ab_alphabet()), teacher);
    EXPECT_EQ(r.hypothesis.rfsa.states, oracle::prime_residuals(testing_support::graph_of(corpus[i]))) << i;
    EXPECT_FALSE(moore_distinguish(determinize(r.hypothesis.rfsa), corpus[i])) << i;
  }
}

TEST(JslDomain, CarrierCapIsABudget) {
  DfaTeacher teacher(suffix_a_dfa(4));
  EXPECT_THROW(learn(JslDomain(ab_alphabet(), 3), teacher), BudgetExceeded);
}

TEST(JslDomain, RowOrder) {
  EXPECT_TRUE(row_leq({false, true}, {true, true}));
  EXPECT_FALSE(row_leq({true, false}, {false, true}));
  EXPECT_EQ(row_join({true, false}, {false, true}), (BitRow{true, true}));
}

TEST(Rfsa, NondeterministicAcceptance) {
  // Σ*a over {a, b}: state 0 loops, guesses the last a into state 1.
  Rfsa r;
  r.alphabet = ab_alphabet();
  r.states = 2;
  r.initial = {0};
  r.transitions = {{{0, 1}, {0}}, {{}, {}}};
  r.accepting = {false, true};
  r.validate();
  EXPECT_TRUE(nfa_accepts(r, Word{1, 0}));
  EXPECT_FALSE(nfa_accepts(r, Word{0, 1}));
  EXPECT_EQ(minimize_moore(determinize(r)).size(), 2u);
  EXPECT_FALSE(rfsa_language_equiv(r, ends_in_a_dfa()));
  EXPECT_TRUE(rfsa_language_equiv(r, ab_star_dfa()));
}

TEST(SortedDomain, LearnsTwoSortedMachine) {
  SortedAlphabet sigma({"p", "q"}, {{"x", 0, 1}, {"y", 1, 0}, {"z", 1, 1}}, {{"g", 0}});
  SortedMachine target(sigma, {2, 3}, {0}, {{0, 2}, {1, 0, 0}, {1, 2, 0}}, {{false, true}, {true, false, false}});
  SortedMachine minimal = minimize_sorted(target);
  for (auto mode : {CounterexampleMode::prefix, CounterexampleMode::suffix}) {
    SortedTeacher teacher(target);
    auto r = learn(SortedDomain(sigma), teacher, in_mode(mode));
    EXPECT_TRUE(isomorphic(r.hypothesis, minimal));
    EXPECT_FALSE(sorted_distinguish(r.hypothesis, target));
  }
}

TEST(SortedDomain, SingleSortedMatchesBooleanLearning) {
  for (const auto& [name, dfa] : testing_support::boolean_builtins()) {
    SortedTeacher teacher(as_single_sorted(dfa));
    auto r = learn(SortedDomain(as_single_sorted(dfa).alphabet()), teacher);
    EXPECT_EQ(r.hypothesis.total_states(), minimize_moore(dfa).size()) << name;
  }
}

TEST(SortedDomain, RowsOfDifferentSortsNeverMerge) {
  // Both sorts have a single state with equal outputs.
  SortedAlphabet sigma({"p", "q"}, {{"x", 0, 1}, {"y", 1, 0}}, {{"g", 0}});
  SortedMachine target(sigma, {1, 1}, {0}, {{0}, {0}}, {{true}, {true}});
  SortedTeacher teacher(target);
  auto r = learn(SortedDomain(sigma), teacher);
  EXPECT_EQ(r.hypothesis.state_counts(), (std::vector<std::size_t>{1, 1}));
}

TEST(SortedDomain, SuffixModeTraitDependsOnGenerators) {
  SortedAlphabet one({"p"}, {{"x", 0, 0}}, {{"g", 0}});
  SortedAlphabet two({"p"}, {{"x", 0, 0}}, {{"g", 0}, {"h", 0}});
  SortedMachine m1(one, {1}, {0}, {{0}}, {{true}});
  SortedMachine m2(two, {1}, {0, 0}, {{0}}, {{true}});
  SortedTeacher t1(m1), t2(m2);
  Learner<SortedDomain> l1(SortedDomain(one), t1), l2(SortedDomain(two), t2);
  EXPECT_TRUE(SortedDomain(one).suffix_mode_keeps_consistency(l1.table()));
  EXPECT_FALSE(SortedDomain(two).suffix_mode_keeps_consistency(l2.table()));
}
