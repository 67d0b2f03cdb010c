#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/moore.hpp"
#include "glstar/word.hpp"

namespace glstar {

/// Nondeterministic automaton with a set of initial states. Used for
/// residual automata, whose states stand for residual languages.
struct Rfsa {
  Alphabet alphabet;
  std::size_t states = 0;
  std::vector<State> initial;
  /// transitions[q][a] = sorted successor list.
  std::vector<std::vector<std::vector<State>>> transitions;
  std::vector<bool> accepting;

  void validate() const {
    if (alphabet.empty()) throw InvalidInput("rfsa needs a non-empty alphabet");
    if (transitions.size() != states || accepting.size() != states) throw InvalidInput("rfsa tables have wrong size");
    for (State q : initial)
      if (q >= states) throw InvalidInput("rfsa initial state out of range");
    for (const auto& row : transitions) {
      if (row.size() != alphabet.size()) throw InvalidInput("rfsa transitions are not total over the alphabet");
      for (const auto& succ : row)
        for (State p : succ)
          if (p >= states) throw InvalidInput("rfsa transition target out of range");
    }
  }

  friend bool operator==(const Rfsa&, const Rfsa&) = default;
};

namespace detail {

inline std::vector<bool> rfsa_step(const Rfsa& r, const std::vector<bool>& set, Letter a) {
  std::vector<bool> out(r.states, false);
  for (State q = 0; q < r.states; ++q)
    if (set[q])
      for (State p : r.transitions[q][a]) out[p] = true;
  return out;
}

inline bool rfsa_accepts_set(const Rfsa& r, const std::vector<bool>& set) {
  for (State q = 0; q < r.states; ++q)
    if (set[q] && r.accepting[q]) return true;
  return false;
}

}  // namespace detail

inline bool nfa_accepts(const Rfsa& r, std::span<const Letter> w) {
  std::vector<bool> set(r.states, false);
  for (State q : r.initial) set[q] = true;
  for (Letter a : w) {
    if (a >= r.alphabet.size()) throw InvalidInput("rejected input: unknown letter index " + std::to_string(a));
    set = detail::rfsa_step(r, set, a);
  }
  return detail::rfsa_accepts_set(r, set);
}

/// Subset construction over the reachable subsets, numbered in breadth-first
/// discovery order.
inline MooreMachine determinize(const Rfsa& r) {
  r.validate();
  std::vector<bool> start(r.states, false);
  for (State q : r.initial) start[q] = true;
  std::map<std::vector<bool>, State> index{{start, 0}};
  std::vector<std::vector<bool>> subsets{start};
  std::vector<State> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (Letter a = 0; a < r.alphabet.size(); ++a) {
      auto next = detail::rfsa_step(r, subsets[i], a);
      auto [it, fresh] = index.emplace(next, subsets.size());
      if (fresh) subsets.push_back(next);
      delta.push_back(it->second);
    }
  std::vector<bool> out;
  for (const auto& s : subsets) out.push_back(detail::rfsa_accepts_set(r, s));
  return MooreMachine(r.alphabet, subsets.size(), 0, std::move(delta), std::move(out));
}

/// Shortest-lex word separating the residual automaton from the DFA.
inline std::optional<Word> rfsa_language_equiv(const Rfsa& r, const MooreMachine& d) {
  return moore_distinguish(determinize(r), d);
}

}  // namespace glstar
