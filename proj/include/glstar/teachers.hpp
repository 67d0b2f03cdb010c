#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/moore.hpp"
#include "glstar/presentations.hpp"
#include "glstar/rational.hpp"
#include "glstar/sorted.hpp"
#include "glstar/teacher.hpp"
#include "glstar/weighted.hpp"

namespace glstar {

using DfaTeacherBase = Teacher<Word, bool, MooreMachine>;
using WfaTeacherBase = Teacher<Word, Rational, WeightedAutomaton>;
using SortedTeacherBase = Teacher<SortedWord, bool, SortedMachine>;

/// Answers from a target DFA; equivalence by product search.
class DfaTeacher : public DfaTeacherBase {
 public:
  explicit DfaTeacher(MooreMachine target) : target_(std::move(target)) {}
  bool membership(const Word& w) const override { return run_moore(target_, w); }
  std::optional<Word> equivalence(const MooreMachine& h) const override { return moore_distinguish(target_, h); }
  const MooreMachine& target() const { return target_; }

 private:
  MooreMachine target_;
};

/// Membership from a predicate on words; equivalence against a reference
/// DFA for the same language.
class PredicateTeacher : public DfaTeacherBase {
 public:
  PredicateTeacher(WordPredicate predicate, MooreMachine reference)
      : predicate_(std::move(predicate)), reference_(std::move(reference)) {}
  bool membership(const Word& w) const override { return predicate_(w); }
  std::optional<Word> equivalence(const MooreMachine& h) const override { return moore_distinguish(reference_, h); }

 private:
  WordPredicate predicate_;
  MooreMachine reference_;
};

class WfaTeacher : public WfaTeacherBase {
 public:
  explicit WfaTeacher(WeightedAutomaton target) : target_(std::move(target)) {}
  Rational membership(const Word& w) const override { return wfa_value(target_, w); }
  std::optional<Word> equivalence(const WeightedAutomaton& h) const override { return wfa_distinguish(target_, h); }
  const WeightedAutomaton& target() const { return target_; }

 private:
  WeightedAutomaton target_;
};

class SortedTeacher : public SortedTeacherBase {
 public:
  explicit SortedTeacher(SortedMachine target) : target_(std::move(target)) {}
  bool membership(const SortedWord& w) const override { return run_sorted(target_, w).output; }
  std::optional<SortedWord> equivalence(const SortedMachine& h) const override {
    return sorted_distinguish(target_, h);
  }
  const SortedMachine& target() const { return target_; }

 private:
  SortedMachine target_;
};

/// Teacher for a linearized language: membership through the
/// interpretation of instruction words, equivalence against a reference
/// machine over the presentation alphabet.
class LinearizedTeacher : public SortedTeacherBase {
 public:
  LinearizedTeacher(std::function<bool(const SortedWord&)> membership, SortedMachine reference)
      : membership_(std::move(membership)), reference_(std::move(reference)) {}
  bool membership(const SortedWord& w) const override { return membership_(w); }
  std::optional<SortedWord> equivalence(const SortedMachine& h) const override {
    return sorted_distinguish(reference_, h);
  }
  const SortedMachine& reference() const { return reference_; }

 private:
  std::function<bool(const SortedWord&)> membership_;
  SortedMachine reference_;
};

/// A language of finite words given by a predicate on I^+ and a reference
/// machine for its linearization.
struct SemigroupTarget {
  Presentation presentation;
  WordPredicate predicate;
  SortedMachine reference;
};

inline LinearizedTeacher semigroup_teacher(const SemigroupTarget& t) {
  return LinearizedTeacher(linearize_membership(t.presentation, t.predicate), t.reference);
}

/// An ω-language given on lassos, with an optional finite part and a
/// reference machine over the weak Wilke alphabet.
struct LassoOracleTarget {
  Presentation presentation;
  WordPredicate finite;
  LassoPredicate lasso;
  SortedMachine reference;

  /// Checks the reference machine against the predicates on every lasso
  /// with spoke and loop up to length 3 (and every finite word up to
  /// length 3), and the lasso predicate on `samples` random pairs of
  /// equal lassos. Throws InvalidInput on the first mismatch.
  void validate(std::uint64_t seed = 1, std::size_t samples = 100) const {
    const Alphabet& base = presentation.base();
    const std::size_t k = base.size();
    auto membership = linearize_membership(presentation, finite, lasso);
    for (const auto& u : words_up_to(k, 3))
      for (std::size_t len = 1; len <= 3; ++len)
        for (const auto& v : words_of_length(k, len)) {
          Lasso l{u, v};
          if (run_sorted(reference, presentation.from_lasso(l)).output != lasso(l))
            throw InvalidInput("reference machine disagrees with the lasso predicate on (" + base.format(u) + ", " +
                               base.format(v) + ")");
        }
    for (std::size_t len = 1; len <= 3; ++len)
      for (const auto& u : words_of_length(k, len)) {
        SortedWord w = presentation.from_word(u);
        if (run_sorted(reference, w).output != membership(w))
          throw InvalidInput("reference machine disagrees with the finite part on '" + base.format(u) + "'");
      }
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    for (std::size_t i = 0; i < samples; ++i) {
      Lasso l;
      for (std::size_t j = pick(0, 3); j > 0; --j) l.spoke.push_back(pick(0, k - 1));
      for (std::size_t j = pick(1, 3); j > 0; --j) l.loop.push_back(pick(0, k - 1));
      // Same word: unroll the loop into the spoke, then repeat the loop.
      Lasso m{l.spoke, {}};
      for (std::size_t j = pick(0, 2 * l.loop.size()); j > 0; --j) {
        m.spoke.push_back(l.loop[(m.spoke.size() - l.spoke.size()) % l.loop.size()]);
      }
      std::size_t shift = (m.spoke.size() - l.spoke.size()) % l.loop.size();
      for (std::size_t r = pick(1, 3); r > 0; --r)
        for (std::size_t j = 0; j < l.loop.size(); ++j) m.loop.push_back(l.loop[(shift + j) % l.loop.size()]);
      if (!lasso_eq(l, m)) throw ContractViolation("lasso sampler produced different lassos");
      if (lasso(l) != lasso(m))
        throw InvalidInput("lasso predicate distinguishes equal lassos (" + base.format(l.spoke) + ", " +
                           base.format(l.loop) + ") and (" + base.format(m.spoke) + ", " + base.format(m.loop) + ")");
    }
  }
};

/// Validates the target, then answers through the linearized predicates.
inline LinearizedTeacher wilke_teacher(const LassoOracleTarget& t) {
  t.validate();
  return LinearizedTeacher(linearize_membership(t.presentation, t.finite, t.lasso), t.reference);
}

/// Minimal machine of the linearization of L(dfa) over a semigroup
/// presentation: states are the state transformations of nonempty words,
/// →a composes δ_a after, ←a composes δ_a before, and a transformation is
/// accepting when it maps the initial state into a final state.
inline SortedMachine transition_semigroup_machine(const MooreMachine& dfa, const Presentation& p) {
  if (p.is_wilke()) throw InvalidInput("transition semigroup needs a semigroup presentation");
  if (!(dfa.alphabet() == p.base())) throw InvalidInput("dfa alphabet differs from the presentation base");
  using Map = std::vector<State>;
  const std::size_t n = dfa.size();
  auto letter_map = [&](Letter a) {
    Map f(n);
    for (State q = 0; q < n; ++q) f[q] = dfa.next(q, a);
    return f;
  };
  std::map<Map, State> index;
  std::vector<Map> maps;
  auto intern = [&](Map f) {
    auto [it, fresh] = index.emplace(f, maps.size());
    if (fresh) maps.push_back(std::move(f));
    return it->second;
  };
  std::vector<State> init;
  for (Letter a = 0; a < p.base().size(); ++a) init.push_back(intern(letter_map(a)));
  const auto& sigma = p.alphabet();
  std::vector<std::map<State, State>> edges(sigma.letter_count());
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (Letter x = 0; x < sigma.letter_count(); ++x) {
      const auto& ins = p.instruction(x);
      Map f = maps[i], g(n);
      for (State q = 0; q < n; ++q)
        g[q] = ins.op == Op::append ? dfa.next(f[q], ins.base) : f[dfa.next(q, ins.base)];
      edges[x][i] = intern(std::move(g));
    }
  std::vector<std::vector<State>> delta(sigma.letter_count());
  for (Letter x = 0; x < sigma.letter_count(); ++x)
    for (std::size_t i = 0; i < maps.size(); ++i) delta[x].push_back(edges[x].at(i));
  std::vector<bool> out;
  for (const auto& f : maps) out.push_back(dfa.output(f[dfa.initial()]));
  return minimize_sorted(SortedMachine(sigma, {maps.size()}, std::move(init), std::move(delta), {std::move(out)}));
}

}  // namespace glstar
