#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/moore.hpp"
#include "glstar/presentations.hpp"
#include "glstar/rational.hpp"
#include "glstar/sorted.hpp"
#include "glstar/teachers.hpp"
#include "glstar/weighted.hpp"

namespace glstar {

inline Alphabet ab_alphabet() { return Alphabet::from_chars("ab"); }

inline MooreMachine sigma_star_dfa(const Alphabet& sigma = ab_alphabet()) {
  return make_moore(sigma, 1, 0, [](State, Letter) { return State{0}; }, [](State) { return true; });
}

/// Words whose last letter is the first letter of the alphabet.
inline MooreMachine ends_in_a_dfa() {
  return make_moore(ab_alphabet(), 2, 0, [](State, Letter a) { return a == 0 ? State{1} : State{0}; },
                    [](State q) { return q == 1; });
}

/// (ab)*: 0 expects a, 1 expects b, 2 is the sink.
inline MooreMachine ab_star_dfa() {
  return make_moore(
      ab_alphabet(), 3, 0,
      [](State q, Letter a) -> State {
        if (q == 0 && a == 0) return 1;
        if (q == 1 && a == 1) return 0;
        return 2;
      },
      [](State q) { return q == 0; });
}

/// Number of a's divisible by k.
inline MooreMachine mod_counter_dfa(std::size_t k) {
  if (k == 0) throw InvalidInput("modulus must be positive");
  return make_moore(ab_alphabet(), k, 0, [k](State q, Letter a) { return a == 0 ? (q + 1) % k : q; },
                    [](State q) { return q == 0; });
}

/// The n-th letter from the end is a. States remember the last n letters.
inline MooreMachine suffix_a_dfa(std::size_t n) {
  if (n == 0 || n > 12) throw InvalidInput("suffix position must be in 1..12");
  const std::size_t size = std::size_t{1} << n, top = size >> 1;
  return make_moore(ab_alphabet(), size, 0, [=](State q, Letter a) { return ((q << 1) | (a == 0 ? 1 : 0)) & (size - 1); },
                    [=](State q) { return (q & top) != 0; });
}

/// value(w) = number of a's in w.
inline WeightedAutomaton count_a_wfa() {
  Matrix ma{{1, 1}, {0, 1}}, mb{{1, 0}, {0, 1}};
  return WeightedAutomaton(ab_alphabet(), {1, 0}, {ma, mb}, {0, 1});
}

/// Uniformly random complete DFA with `states` states.
template <class Rng>
MooreMachine random_dfa(Rng& rng, std::size_t states, const Alphabet& sigma) {
  std::uniform_int_distribution<std::size_t> target(0, states - 1);
  std::bernoulli_distribution accept(0.5);
  std::vector<State> delta(states * sigma.size());
  for (auto& q : delta) q = target(rng);
  std::vector<bool> out(states);
  for (std::size_t q = 0; q < states; ++q) out[q] = accept(rng);
  return MooreMachine(sigma, states, 0, std::move(delta), std::move(out));
}

/// Random minimal DFA with at most `max_states` states and at least two
/// states unless `max_states` is 1.
template <class Rng>
MooreMachine random_minimal_dfa(Rng& rng, std::size_t max_states, const Alphabet& sigma) {
  std::uniform_int_distribution<std::size_t> size(1, max_states);
  while (true) {
    MooreMachine m = minimize_moore(random_dfa(rng, size(rng), sigma));
    if (m.size() >= 2 || max_states == 1) return m;
  }
}

/// Reference machine for "infinitely many a's" over the weak Wilke
/// alphabet of {a, b}. Sort +: whether the word contains a; sort ω:
/// accepted or rejected.
inline SortedMachine inf_a_reference(const Presentation& p) {
  const auto& sigma = p.alphabet();
  std::vector<std::vector<State>> delta(sigma.letter_count());
  for (Letter x = 0; x < sigma.letter_count(); ++x) {
    const auto& ins = p.instruction(x);
    switch (ins.op) {
      case Op::append:
        delta[x] = ins.base == 0 ? std::vector<State>{0, 0} : std::vector<State>{0, 1};
        break;
      case Op::omega:
        delta[x] = {0, 1};
        break;
      case Op::prepend_spoke:
        delta[x] = {0, 1};
        break;
      case Op::prepend:
        throw InvalidInput("unexpected letter in the weak Wilke alphabet");
    }
  }
  return minimize_sorted(SortedMachine(sigma, {2, 2}, {0, 1}, std::move(delta), {{false, false}, {true, false}}));
}

/// Reference machine for "some b occurs" over the weak Wilke alphabet of
/// {a, b}. Sort +: whether b has occurred; sort ω: accepted or rejected.
inline SortedMachine eventually_b_reference(const Presentation& p) {
  const auto& sigma = p.alphabet();
  std::vector<std::vector<State>> delta(sigma.letter_count());
  for (Letter x = 0; x < sigma.letter_count(); ++x) {
    const auto& ins = p.instruction(x);
    switch (ins.op) {
      case Op::append:
        delta[x] = ins.base == 1 ? std::vector<State>{0, 0} : std::vector<State>{0, 1};
        break;
      case Op::omega:
        delta[x] = {0, 1};
        break;
      case Op::prepend_spoke:
        delta[x] = ins.base == 1 ? std::vector<State>{0, 0} : std::vector<State>{0, 1};
        break;
      case Op::prepend:
        throw InvalidInput("unexpected letter in the weak Wilke alphabet");
    }
  }
  return minimize_sorted(SortedMachine(sigma, {2, 2}, {1, 0}, std::move(delta), {{false, false}, {true, false}}));
}

inline bool contains_letter(const Word& w, Letter a) { return std::find(w.begin(), w.end(), a) != w.end(); }

inline LassoOracleTarget inf_a_target() {
  Presentation p = Presentation::wilke(ab_alphabet());
  return {p, nullptr, [](const Lasso& l) { return contains_letter(l.loop, 0); }, inf_a_reference(p)};
}

inline LassoOracleTarget eventually_b_target() {
  Presentation p = Presentation::wilke(ab_alphabet());
  return {p, nullptr, [](const Lasso& l) { return contains_letter(l.spoke, 1) || contains_letter(l.loop, 1); },
          eventually_b_reference(p)};
}

/// {a^2k : k ≥ 1} over {a}.
inline SemigroupTarget even_a_length_target() {
  Alphabet base = Alphabet::from_chars("a");
  MooreMachine parity = make_moore(base, 2, 0, [](State q, Letter) { return 1 - q; }, [](State q) { return q == 0; });
  Presentation p = Presentation::semigroup(base);
  return {p, [](const Word& w) { return !w.empty() && w.size() % 2 == 0; }, transition_semigroup_machine(parity, p)};
}

/// (ab)^+ over {a, b}.
inline SemigroupTarget ab_plus_target() {
  Presentation p = Presentation::semigroup(ab_alphabet());
  auto pred = [](const Word& w) {
    if (w.empty() || w.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != i % 2) return false;
    return true;
  };
  return {p, pred, transition_semigroup_machine(ab_star_dfa(), p)};
}

enum class TargetKind { boolean, weighted, semigroup, omega };

inline std::string kind_name(TargetKind k) {
  switch (k) {
    case TargetKind::boolean:
      return "boolean";
    case TargetKind::weighted:
      return "weighted";
    case TargetKind::semigroup:
      return "semigroup";
    case TargetKind::omega:
      return "omega";
  }
  return "?";
}

struct BuiltinTarget {
  std::string name;
  std::string description;
  TargetKind kind = TargetKind::boolean;
  std::optional<MooreMachine> dfa;
  /// Membership of finite words without consulting the DFA.
  WordPredicate predicate;
  std::optional<WeightedAutomaton> wfa;
  std::optional<SemigroupTarget> semigroup;
  std::optional<LassoOracleTarget> omega;
};

namespace detail {

inline BuiltinTarget boolean_target(std::string name, std::string description, MooreMachine dfa, WordPredicate pred) {
  BuiltinTarget t;
  t.name = std::move(name);
  t.description = std::move(description);
  t.kind = TargetKind::boolean;
  t.dfa = std::move(dfa);
  t.predicate = std::move(pred);
  return t;
}

}  // namespace detail

inline std::vector<BuiltinTarget> builtin_targets() {
  std::vector<BuiltinTarget> out;
  out.push_back(detail::boolean_target("sigma-star", "all words over {a,b}", sigma_star_dfa(),
                                       [](const Word&) { return true; }));
  out.push_back(detail::boolean_target("ends-in-a", "words over {a,b} ending in a", ends_in_a_dfa(),
                                       [](const Word& w) { return !w.empty() && w.back() == 0; }));
  out.push_back(detail::boolean_target("ab-star", "(ab)*", ab_star_dfa(), [](const Word& w) {
    if (w.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != i % 2) return false;
    return true;
  }));
  for (std::size_t k = 2; k <= 8; ++k)
    out.push_back(detail::boolean_target("mod-" + std::to_string(k),
                                         "number of a's divisible by " + std::to_string(k), mod_counter_dfa(k),
                                         [k](const Word& w) {
                                           return static_cast<std::size_t>(std::count(w.begin(), w.end(), 0)) % k == 0;
                                         }));
  for (std::size_t n = 1; n <= 4; ++n)
    out.push_back(detail::boolean_target("suffix-a-at-" + std::to_string(n),
                                         "the " + std::to_string(n) + "-th letter from the end is a", suffix_a_dfa(n),
                                         [n](const Word& w) { return w.size() >= n && w[w.size() - n] == 0; }));
  {
    BuiltinTarget t;
    t.name = "count-a";
    t.description = "number of a's in a word over {a,b}";
    t.kind = TargetKind::weighted;
    t.wfa = count_a_wfa();
    out.push_back(std::move(t));
  }
  {
    BuiltinTarget t;
    t.name = "even-a-length";
    t.description = "nonempty words of even length over {a}";
    t.kind = TargetKind::semigroup;
    t.semigroup = even_a_length_target();
    t.predicate = t.semigroup->predicate;
    out.push_back(std::move(t));
  }
  {
    BuiltinTarget t;
    t.name = "ab-plus";
    t.description = "(ab)^+";
    t.kind = TargetKind::semigroup;
    t.semigroup = ab_plus_target();
    t.predicate = t.semigroup->predicate;
    out.push_back(std::move(t));
  }
  {
    BuiltinTarget t;
    t.name = "inf-a";
    t.description = "infinite words over {a,b} with infinitely many a's";
    t.kind = TargetKind::omega;
    t.omega = inf_a_target();
    out.push_back(std::move(t));
  }
  {
    BuiltinTarget t;
    t.name = "eventually-b";
    t.description = "infinite words over {a,b} containing b";
    t.kind = TargetKind::omega;
    t.omega = eventually_b_target();
    out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& t : builtin_targets()) out.push_back(t.name);
  return out;
}

inline BuiltinTarget builtin_target(const std::string& name) {
  for (auto& t : builtin_targets())
    if (t.name == name) return t;
  throw InvalidInput("unknown builtin target '" + name + "'");
}

}  // namespace glstar
