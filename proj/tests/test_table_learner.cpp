#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace glstar;
using testing_support::graph_of;
using testing_support::language_of;

namespace {

ObservationTable<BoolDomain> table_for(const MooreMachine& m, std::size_t budget = 0) {
  return ObservationTable<BoolDomain>(BoolDomain(m.alphabet()), [m](const Word& w) { return run_moore(m, w); }, budget);
}

/// Answers membership from a DFA but hands out a fixed word as
/// counterexample, whether or not it separates.
class LyingTeacher : public DfaTeacherBase {
 public:
  LyingTeacher(MooreMachine m, Word ce) : m_(std::move(m)), ce_(std::move(ce)) {}
  bool membership(const Word& w) const override { return run_moore(m_, w); }
  std::optional<Word> equivalence(const MooreMachine&) const override { return ce_; }

 private:
  MooreMachine m_;
  Word ce_;
};

}  // namespace

TEST(ObservationTable, InitialShapeAndQueries) {
  auto table = table_for(ab_star_dfa());
  EXPECT_EQ(table.prefixes().size(), 1u);
  EXPECT_EQ(table.suffixes().size(), 1u);
  // ε, a, b.
  EXPECT_EQ(table.membership_queries(), 3u);
  EXPECT_TRUE(table.cell(Word{}, Word{}));
  EXPECT_FALSE(table.cell(Word{0}, Word{}));
}

TEST(ObservationTable, AddsPrefixAndSuffixClosures) {
  auto table = table_for(ab_star_dfa());
  table.add_prefix(Word{0, 1, 0});
  table.add_suffix(Word{1, 0, 1});
  table.fill();
  EXPECT_EQ(table.prefixes().size(), 4u);
  EXPECT_EQ(table.suffixes().size(), 4u);
  EXPECT_TRUE(table.has_suffix(Word{0, 1}));
  EXPECT_TRUE(table.cell(Word{0}, Word{1}));
}

TEST(ObservationTable, CachesQueries) {
  auto table = table_for(ab_star_dfa());
  std::size_t before = table.membership_queries();
  table.fill();
  table.lookup(Word{});
  EXPECT_EQ(table.membership_queries(), before);
}

TEST(ObservationTable, BudgetIsEnforced) {
  EXPECT_THROW(table_for(ab_star_dfa(), 2), BudgetExceeded);
}

TEST(ObservationTable, UnfilledCellIsAContractViolation) {
  auto table = table_for(ab_star_dfa());
  EXPECT_THROW(table.cell(Word{1, 1, 1}, Word{}), ContractViolation);
}

TEST(ObservationTable, DumpListsRowsAndExtensions) {
  auto table = table_for(ends_in_a_dfa());
  EXPECT_EQ(table.dump(), "S: [ε]\nT: [ε]\nε | 0\n--\na | 1\nb | 0\n");
}

TEST(ExtendS, AddsRowsAndRejectsClosedTables) {
  auto table = table_for(ends_in_a_dfa());
  EXPECT_FALSE(is_closed(table));
  extend_s(table);
  EXPECT_TRUE(is_closed(table));
  EXPECT_EQ(table.prefixes().size(), 2u);
  EXPECT_THROW(extend_s(table), ContractViolation);
}

TEST(ExtendT, ResolvesInconsistency) {
  auto table = table_for(ab_star_dfa());
  table.add_prefix(Word{0, 1});
  table.add_prefix(Word{1});
  table.fill();
  // a and b have equal rows over {ε}, their b-successors differ.
  ASSERT_FALSE(is_consistent(table));
  std::size_t columns = table.suffixes().size();
  extend_t(table);
  EXPECT_GT(table.suffixes().size(), columns);
  auto trivial = table_for(sigma_star_dfa());
  EXPECT_THROW(extend_t(trivial), ContractViolation);
}

TEST(Learner, LearnsAbStarExactly) {
  DfaTeacher teacher(ab_star_dfa());
  auto r = learn(BoolDomain(ab_alphabet()), teacher);
  EXPECT_EQ(r.hypothesis.size(), 3u);
  EXPECT_TRUE(oracle::isomorphic(graph_of(r.hypothesis), graph_of(ab_star_dfa())));
  EXPECT_EQ(r.stats.equivalence_queries, 2u);
  EXPECT_EQ(r.stats.counterexamples + 1, r.stats.equivalence_queries);
  auto alternating = [](const Word& w) {
    if (w.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != i % 2) return false;
    return true;
  };
  for (const auto& w : oracle::all_words(2, 8)) EXPECT_EQ(run_moore(r.hypothesis, w), alternating(w));
}

TEST(Learner, StateCountMatchesNerodeOracle) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 15; ++i) {
    MooreMachine target = random_minimal_dfa(rng, 10, ab_alphabet());
    DfaTeacher teacher(target);
    auto r = learn(BoolDomain(ab_alphabet()), teacher);
    std::size_t n = target.size();
    EXPECT_EQ(r.hypothesis.size(), oracle::nerode_classes(language_of(target), 2, n, n));
    EXPECT_TRUE(oracle::isomorphic(graph_of(r.hypothesis), graph_of(target)));
  }
}

TEST(Learner, ObserverSeesGrowingHypotheses) {
  DfaTeacher teacher(suffix_a_dfa(3));
  Learner<BoolDomain> learner(BoolDomain(ab_alphabet()), teacher);
  std::vector<std::size_t> sizes;
  learner.on_hypothesis([&](const auto&, const MooreMachine& h) { sizes.push_back(h.size()); });
  auto r = learner.run();
  ASSERT_FALSE(sizes.empty());
  EXPECT_EQ(sizes.back(), 8u);
  EXPECT_TRUE(std::is_sorted(sizes.begin(), sizes.end()));
  EXPECT_EQ(sizes, r.stats.hypothesis_sizes);
}

TEST(Learner, SuffixModeLearnsTheSameMachine) {
  for (const auto& [name, dfa] : testing_support::boolean_builtins()) {
    DfaTeacher teacher(dfa);
    LearnOptions options;
    options.mode = CounterexampleMode::suffix;
    auto r = learn(BoolDomain(ab_alphabet()), teacher, options);
    EXPECT_TRUE(isomorphic(r.hypothesis, minimize_moore(dfa))) << name;
    EXPECT_EQ(r.stats.extend_t_calls, 0u) << name;
  }
}

TEST(Learner, RejectsNonSeparatingCounterexample) {
  LyingTeacher teacher(sigma_star_dfa(), Word{0, 1});
  EXPECT_THROW(learn(BoolDomain(ab_alphabet()), teacher), TeacherError);
}

TEST(Learner, RejectsCounterexampleWithForeignLetter) {
  LyingTeacher teacher(sigma_star_dfa(), Word{5});
  EXPECT_THROW(learn(BoolDomain(ab_alphabet()), teacher), InvalidInput);
}

TEST(Learner, RoundGuardStopsTheLoop) {
  DfaTeacher teacher(suffix_a_dfa(4));
  LearnOptions options;
  options.max_rounds = 2;
  EXPECT_THROW(learn(BoolDomain(ab_alphabet()), teacher, options), BudgetExceeded);
}

TEST(Learner, QueryBudgetStopsTheLoop) {
  DfaTeacher teacher(suffix_a_dfa(4));
  LearnOptions options;
  options.max_membership_queries = 20;
  EXPECT_THROW(learn(BoolDomain(ab_alphabet()), teacher, options), BudgetExceeded);
}

TEST(Learner, SingleLetterAlphabet) {
  Alphabet a = Alphabet::from_chars("a");
  MooreMachine m = make_moore(a, 3, 0, [](State q, Letter) { return (q + 1) % 3; }, [](State q) { return q == 0; });
  DfaTeacher teacher(m);
  auto r = learn(BoolDomain(a), teacher);
  EXPECT_EQ(r.hypothesis.size(), 3u);
}

TEST(Learner, RunsAreDeterministic) {
  DfaTeacher teacher(suffix_a_dfa(3));
  auto r1 = learn(BoolDomain(ab_alphabet()), teacher);
  auto r2 = learn(BoolDomain(ab_alphabet()), teacher);
  EXPECT_EQ(r1.table.dump(), r2.table.dump());
  EXPECT_EQ(r1.stats, r2.stats);
  EXPECT_EQ(r1.hypothesis, r2.hypothesis);
}
