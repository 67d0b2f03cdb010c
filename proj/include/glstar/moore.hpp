#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/word.hpp"

namespace glstar {

using State = std::size_t;

/// Deterministic automaton with a Boolean output per state. With output read
/// as acceptance this is a complete DFA.
class MooreMachine {
 public:
  MooreMachine() = default;

  /// `transitions` is row-major: transitions[q * |alphabet| + a].
  MooreMachine(Alphabet alphabet, std::size_t states, State initial, std::vector<State> transitions,
               std::vector<bool> output)
      : alphabet_(std::move(alphabet)),
        states_(states),
        initial_(initial),
        delta_(std::move(transitions)),
        output_(std::move(output)) {
    if (alphabet_.empty()) throw InvalidInput("moore machine needs a non-empty alphabet");
    if (states_ == 0) throw InvalidInput("moore machine needs at least one state");
    if (initial_ >= states_) throw InvalidInput("initial state out of range");
    if (delta_.size() != states_ * alphabet_.size()) throw InvalidInput("transition table is not total");
    if (output_.size() != states_) throw InvalidInput("output map is not total");
    for (State q : delta_)
      if (q >= states_) throw InvalidInput("transition target out of range");
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return states_; }
  State initial() const { return initial_; }
  State next(State q, Letter a) const { return delta_[q * alphabet_.size() + a]; }
  bool output(State q) const { return output_[q]; }
  const std::vector<State>& transitions() const { return delta_; }
  const std::vector<bool>& outputs() const { return output_; }

  State reach(std::span<const Letter> w) const { return reach_from(initial_, w); }

  State reach_from(State q, std::span<const Letter> w) const {
    for (Letter a : w) {
      if (a >= alphabet_.size()) throw InvalidInput("rejected input: unknown letter index " + std::to_string(a));
      q = next(q, a);
    }
    return q;
  }

  friend bool operator==(const MooreMachine&, const MooreMachine&) = default;

 private:
  Alphabet alphabet_;
  std::size_t states_ = 0;
  State initial_ = 0;
  std::vector<State> delta_;
  std::vector<bool> output_;
};

inline bool run_moore(const MooreMachine& m, std::span<const Letter> w) { return m.output(m.reach(w)); }

inline bool run_moore(const MooreMachine& m, std::string_view w) { return run_moore(m, m.alphabet().parse(w)); }

/// Builds a machine from a per-state successor function.
template <class Next, class Out>
MooreMachine make_moore(const Alphabet& alphabet, std::size_t states, State initial, Next next, Out out) {
  std::vector<State> delta(states * alphabet.size());
  std::vector<bool> output(states);
  for (State q = 0; q < states; ++q) {
    output[q] = out(q);
    for (Letter a = 0; a < alphabet.size(); ++a) delta[q * alphabet.size() + a] = next(q, a);
  }
  return MooreMachine(alphabet, states, initial, std::move(delta), std::move(output));
}

namespace detail {

// BFS order of the states reachable from the initial state.
inline std::vector<State> bfs_order(const MooreMachine& m) {
  std::vector<State> order{m.initial()};
  std::vector<bool> seen(m.size(), false);
  seen[m.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter a = 0; a < m.alphabet().size(); ++a) {
      State p = m.next(order[i], a);
      if (!seen[p]) {
        seen[p] = true;
        order.push_back(p);
      }
    }
  return order;
}

// Coarsest output-respecting partition stable under transitions, computed by
// Moore-style iterated splitting. Returns a block id per state.
inline std::vector<std::size_t> moore_partition(const MooreMachine& m) {
  std::size_t n = m.size();
  std::vector<std::size_t> block(n);
  for (State q = 0; q < n; ++q) block[q] = m.output(q) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::size_t> sig{block[q]};
      for (Letter a = 0; a < m.alphabet().size(); ++a) sig.push_back(block[m.next(q, a)]);
      next[q] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    if (ids.size() == count) return next;
    count = ids.size();
    block = std::move(next);
  }
}

}  // namespace detail

/// Renumbers the reachable part in BFS order (initial = 0, letters in
/// alphabet order). Two reachable machines are isomorphic iff their
/// canonical forms are equal.
inline MooreMachine canonical_form(const MooreMachine& m) {
  auto order = detail::bfs_order(m);
  std::vector<State> index(m.size(), m.size());
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  return make_moore(
      m.alphabet(), order.size(), 0, [&](State q, Letter a) { return index[m.next(order[q], a)]; },
      [&](State q) { return m.output(order[q]); });
}

inline MooreMachine restrict_to_reachable(const MooreMachine& m) { return canonical_form(m); }

/// Quotient by the coarsest stable partition, without dropping unreachable
/// states first. Useful for checking simplicity of machines whose carrier
/// must be kept whole.
inline std::size_t count_distinguishable(const MooreMachine& m) {
  auto block = detail::moore_partition(m);
  std::size_t k = 0;
  for (auto b : block) k = std::max(k, b + 1);
  return k;
}

/// Minimal machine for the same language: reachable part, then
/// partition refinement, then canonical BFS numbering.
inline MooreMachine minimize_moore(const MooreMachine& m) {
  MooreMachine r = restrict_to_reachable(m);
  auto block = detail::moore_partition(r);
  std::size_t k = 0;
  for (auto b : block) k = std::max(k, b + 1);
  std::vector<State> rep(k, r.size());
  for (State q = 0; q < r.size(); ++q)
    if (rep[block[q]] == r.size()) rep[block[q]] = q;
  MooreMachine quotient = make_moore(
      r.alphabet(), k, block[r.initial()], [&](State b, Letter a) { return block[r.next(rep[b], a)]; },
      [&](State b) { return r.output(rep[b]); });
  return canonical_form(quotient);
}

inline bool isomorphic(const MooreMachine& a, const MooreMachine& b) {
  return a.alphabet() == b.alphabet() && canonical_form(a) == canonical_form(b);
}

inline bool is_minimal(const MooreMachine& m) {
  return detail::bfs_order(m).size() == m.size() && count_distinguishable(m) == m.size();
}

/// Shortest (then lexicographically least) word on which the outputs of the
/// two machines differ, or nothing when their languages coincide.
inline std::optional<Word> moore_distinguish(const MooreMachine& m1, const MooreMachine& m2) {
  if (!(m1.alphabet() == m2.alphabet())) throw InvalidInput("moore_distinguish: alphabet mismatch");
  const std::size_t k = m1.alphabet().size();
  struct Node {
    State p, q;
    std::size_t parent;
    Letter via;
  };
  std::vector<Node> nodes{{m1.initial(), m2.initial(), 0, 0}};
  std::vector<bool> seen(m1.size() * m2.size(), false);
  seen[m1.initial() * m2.size() + m2.initial()] = true;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [p, q, parent, via] = nodes[i];
    if (m1.output(p) != m2.output(q)) {
      Word w;
      for (std::size_t j = i; j != 0; j = nodes[j].parent) w.push_back(nodes[j].via);
      return Word(w.rbegin(), w.rend());
    }
    for (Letter a = 0; a < k; ++a) {
      State p2 = m1.next(p, a), q2 = m2.next(q, a);
      if (!seen[p2 * m2.size() + q2]) {
        seen[p2 * m2.size() + q2] = true;
        nodes.push_back({p2, q2, i, a});
      }
    }
  }
  return std::nullopt;
}

/// Shortest-lex access word for every reachable state (empty optional for
/// unreachable ones).
inline std::vector<std::optional<Word>> access_words(const MooreMachine& m) {
  std::vector<std::optional<Word>> out(m.size());
  out[m.initial()] = Word{};
  std::deque<State> queue{m.initial()};
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < m.alphabet().size(); ++a) {
      State p = m.next(q, a);
      if (!out[p]) {
        out[p] = append(*out[q], a);
        queue.push_back(p);
      }
    }
  }
  return out;
}

/// Synchronous product with outputs combined by `combine`.
template <class Combine>
MooreMachine product(const MooreMachine& m1, const MooreMachine& m2, Combine combine) {
  if (!(m1.alphabet() == m2.alphabet())) throw InvalidInput("product: alphabet mismatch");
  const std::size_t n2 = m2.size();
  return restrict_to_reachable(make_moore(
      m1.alphabet(), m1.size() * n2, m1.initial() * n2 + m2.initial(),
      [&](State s, Letter a) { return m1.next(s / n2, a) * n2 + m2.next(s % n2, a); },
      [&](State s) { return combine(m1.output(s / n2), m2.output(s % n2)); }));
}

}  // namespace glstar
