// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected values come from the brute-force oracles.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace glstar;
using testing_support::graph_of;

namespace {

struct Failure {
  std::ostringstream msg;
  bool failed = false;

  template <class T>
  Failure& operator<<(const T& x) {
    failed = true;
    msg << x;
    return *this;
  }
};

#define CHECK(cond, fail)                      \
  do {                                         \
    if (!(cond)) {                             \
      fail << #cond << "; ";                   \
      return;                                  \
    }                                          \
  } while (false)

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Failure&)> body;
};

Word ab(const std::string& s) { return ab_alphabet().parse(s); }

std::vector<MooreMachine> dfa_corpus() {
  auto corpus = testing_support::random_corpus();
  for (auto& [name, dfa] : testing_support::boolean_builtins()) corpus.push_back(dfa);
  return corpus;
}

void worked_examples(Failure& f) {
  Presentation sg = Presentation::semigroup(ab_alphabet());
  CHECK(interpret_semigroup_word(sg, "a →a →b ←b →a") == ab("baaba"), f);
  Presentation w = Presentation::wilke(ab_alphabet());
  auto v = interpret_wilke_word(w, "a →b →a ω ←ω a ←ω a");
  CHECK(std::holds_alternative<Lasso>(v), f);
  CHECK(lasso_eq(std::get<Lasso>(v), Lasso{ab("aa"), ab("aba")}), f);
  CHECK(oracle::same_infinite_word(std::get<Lasso>(v), Lasso{ab("aa"), ab("aba")}), f);
  Alphabet abc = Alphabet::from_chars("abc");
  Presentation p = Presentation::semigroup(abc);
  auto member = linearize_membership(p, [&](const Word& u) { return u == abc.parse("abc"); });
  for (const char* text : {"a →b →c", "b ←a →c", "b →c ←a", "c ←b ←a"}) CHECK(member(p.parse(text)), f);
}

void dfa_learning(Failure& f) {
  for (const auto& target : dfa_corpus()) {
    DfaTeacher teacher(target);
    auto r = learn(BoolDomain(target.alphabet()), teacher);
    MooreMachine minimal = minimize_moore(target);
    std::size_t n = minimal.size();
    CHECK(isomorphic(r.hypothesis, minimal), f);
    CHECK(oracle::isomorphic(graph_of(r.hypothesis), graph_of(minimal)), f);
    CHECK(r.stats.equivalence_queries <= n, f);
    CHECK(r.stats.extend_s_calls + r.stats.extend_t_calls + r.stats.counterexamples <= 4 * n, f);
  }
}

void hypothesis_invariants(Failure& f) {
  std::size_t hypotheses = 0, violations = 0;
  for (auto mode : {CounterexampleMode::prefix, CounterexampleMode::suffix})
    for (const auto& target : dfa_corpus()) {
      DfaTeacher teacher(target);
      LearnOptions options;
      options.mode = mode;
      Learner<BoolDomain> learner(BoolDomain(target.alphabet()), teacher, options);
      learner.on_hypothesis([&](const ObservationTable<BoolDomain>& table, const MooreMachine& h) {
        ++hypotheses;
        if (!oracle::isomorphic(graph_of(minimize_moore(h)), graph_of(h))) ++violations;
        for (const auto& s : table.prefixes())
          if (run_moore(h, s) != run_moore(target, s)) ++violations;
      });
      try {
        auto r = learner.run();
        // Two checks per hypothesis plus one after every counterexample.
        if (r.stats.invariant_checks != 2 * r.stats.equivalence_queries + r.stats.counterexamples) ++violations;
      } catch (const ContractViolation& e) {
        f << e.what() << "; ";
        return;
      }
    }
  CHECK(hypotheses > 0, f);
  CHECK(violations == 0, f);
}

void weighted(Failure& f) {
  WeightedAutomaton target = count_a_wfa();
  WfaTeacher teacher(target);
  auto r = learn(WeightedDomain(ab_alphabet()), teacher);
  auto value = [](const Word& w) { return Rational(static_cast<long>(std::count(w.begin(), w.end(), 0))); };
  CHECK(r.hypothesis.dimension() == 2, f);
  CHECK(r.hypothesis.dimension() == oracle::hankel_rank(value, 2, 3, 3), f);
  CHECK(!wfa_distinguish(r.hypothesis, target), f);
  auto words = oracle::all_words(2, 8);
  CHECK(words.size() == 511, f);
  for (const auto& w : words) CHECK(wfa_value(r.hypothesis, w) == value(w), f);
}

void residual(Failure& f) {
  MooreMachine target = suffix_a_dfa(3);
  DfaTeacher teacher(target);
  auto r = learn(JslDomain(ab_alphabet()), teacher);
  CHECK(r.hypothesis.rfsa.states == 4, f);
  CHECK(r.hypothesis.rfsa.states == oracle::prime_residuals(graph_of(target)), f);
  CHECK(minimize_moore(target).size() == 8, f);
  CHECK(!moore_distinguish(determinize(r.hypothesis.rfsa), target), f);
  auto lang = testing_support::language_of(target);
  for (const auto& w : oracle::all_words(2, 8)) CHECK(nfa_accepts(r.hypothesis.rfsa, w) == lang(w), f);
}

void omega_regular(Failure& f) {
  LassoOracleTarget t = inf_a_target();
  auto teacher = wilke_teacher(t);
  auto r = learn(SortedDomain(t.presentation.alphabet()), teacher);
  std::size_t lassos = 0;
  for (const auto& u : oracle::all_words(2, 4))
    for (const auto& v : oracle::all_words(2, 3, 1)) {
      Lasso l{u, v};
      ++lassos;
      CHECK(run_sorted(r.hypothesis, t.presentation.from_lasso(l)).output == t.lasso(l), f);
    }
  CHECK(lassos == 434, f);
  WilkeAlgebra alg = extract_wilke_algebra(t.presentation, r.hypothesis);
  CHECK(wilke_law_violation(alg).empty(), f);
  auto [plus, omega] = oracle::lasso_context_classes(t.lasso, 2, 3, 2);
  CHECK(alg.plus == plus, f);
  CHECK(alg.omega == omega, f);
}

void syntactic(Failure& f) {
  SemigroupTarget even = even_a_length_target();
  auto te = semigroup_teacher(even);
  auto re = learn(SortedDomain(even.presentation.alphabet()), te);
  FiniteSemigroup z2 = extract_syntactic_semigroup(even.presentation, re.hypothesis);
  CHECK(z2.size == 2, f);
  CHECK(z2.size == oracle::context_classes(even.predicate, 1, 6, 6), f);
  std::size_t gen = re.hypothesis.initial(0);
  CHECK(z2(gen, gen) != gen, f);
  CHECK(!associativity_violation(z2), f);

  SemigroupTarget abp = ab_plus_target();
  auto ta = semigroup_teacher(abp);
  auto ra = learn(SortedDomain(abp.presentation.alphabet()), ta);
  FiniteSemigroup s = extract_syntactic_semigroup(abp.presentation, ra.hypothesis);
  CHECK(s.size == oracle::context_classes(abp.predicate, 2, 4, 6), f);
  CHECK(!associativity_violation(s), f);
}

void mode_duality(Failure& f) {
  for (const auto& target : dfa_corpus()) {
    DfaTeacher teacher(target);
    LearnOptions suffix;
    suffix.mode = CounterexampleMode::suffix;
    auto rs = learn(BoolDomain(target.alphabet()), teacher, suffix);
    auto rp = learn(BoolDomain(target.alphabet()), teacher);
    CHECK(rs.stats.consistency_defects_at_hypothesis == 0, f);
    CHECK(rs.stats.extend_t_calls == 0, f);
    CHECK(oracle::isomorphic(graph_of(rs.hypothesis), graph_of(rp.hypothesis)), f);
  }
}

void purity(Failure& f) {
  for (const auto& target : dfa_corpus()) {
    DfaTeacher machine(target);
    PredicateTeacher predicate(testing_support::language_of(target), target);
    for (auto mode : {CounterexampleMode::prefix, CounterexampleMode::suffix}) {
      LearnOptions options;
      options.mode = mode;
      auto a = learn(BoolDomain(target.alphabet()), machine, options);
      auto b = learn(BoolDomain(target.alphabet()), predicate, options);
      CHECK(a.table.dump() == b.table.dump(), f);
      CHECK(a.stats == b.stats, f);
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "worked examples of linearized words", 1, worked_examples},
      {2, "DFA learning on random minimal DFAs and builtins", 10, dfa_learning},
      {3, "invariants of every intermediate hypothesis", 30, hypothesis_invariants},
      {4, "weighted learning of count-a", 5, weighted},
      {5, "canonical residual automaton of Σ*aΣΣ", 5, residual},
      {6, "Wilke algebra of infinitely many a", 30, omega_regular},
      {7, "syntactic semigroups of (aa)^+ and (ab)^+", 10, syntactic},
      {8, "suffix mode never needs new columns", 30, mode_duality},
      {9, "teachers of the same language give identical runs", 30, purity},
  };
  int failures = 0;
  for (auto& c : criteria) {
    Failure f;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f << "exception: " << e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!f.failed && seconds > c.limit_seconds) f << "took " << seconds << "s, limit " << c.limit_seconds << "s";
    std::cout << (f.failed ? "FAIL" : "PASS") << " criterion " << c.number << ": " << c.title << " (" << seconds
              << "s)";
    if (f.failed) std::cout << " -- " << f.msg.str();
    std::cout << "\n";
    failures += f.failed ? 1 : 0;
  }
  return failures == 0 ? 0 : 1;
}
