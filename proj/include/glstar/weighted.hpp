#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/rational.hpp"
#include "glstar/word.hpp"

namespace glstar {

/// Linear weighted automaton over the rationals: value(w) = initial ·
/// M(w_1) ··· M(w_k) · final.
class WeightedAutomaton {
 public:
  WeightedAutomaton() = default;

  WeightedAutomaton(Alphabet alphabet, Vector initial, std::vector<Matrix> letter_matrices, Vector final_weights)
      : alphabet_(std::move(alphabet)),
        initial_(std::move(initial)),
        matrices_(std::move(letter_matrices)),
        final_(std::move(final_weights)) {
    const std::size_t d = initial_.size();
    if (alphabet_.empty()) throw InvalidInput("weighted automaton needs a non-empty alphabet");
    if (d == 0) throw InvalidInput("weighted automaton dimension must be positive");
    if (final_.size() != d) throw InvalidInput("final vector has wrong dimension");
    if (matrices_.size() != alphabet_.size()) throw InvalidInput("letter matrices are not total over the alphabet");
    for (const Matrix& m : matrices_) {
      if (m.size() != d) throw InvalidInput("letter matrix has wrong row count");
      for (const Vector& row : m)
        if (row.size() != d) throw InvalidInput("letter matrix has wrong column count");
    }
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t dimension() const { return initial_.size(); }
  const Vector& initial() const { return initial_; }
  const Vector& final_weights() const { return final_; }
  const Matrix& matrix(Letter a) const { return matrices_.at(a); }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  /// initial · M(w) as a row vector.
  Vector forward(std::span<const Letter> w) const {
    Vector v = initial_;
    for (Letter a : w) {
      if (a >= alphabet_.size()) throw InvalidInput("rejected input: unknown letter index " + std::to_string(a));
      v = times(v, matrices_[a]);
    }
    return v;
  }

  /// M(w) · final as a column vector.
  Vector backward(std::span<const Letter> w) const {
    Vector v = final_;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (*it >= alphabet_.size()) throw InvalidInput("rejected input: unknown letter index " + std::to_string(*it));
      v = times(matrices_[*it], v);
    }
    return v;
  }

  friend bool operator==(const WeightedAutomaton&, const WeightedAutomaton&) = default;

 private:
  Alphabet alphabet_;
  Vector initial_;
  std::vector<Matrix> matrices_;
  Vector final_;
};

inline Rational wfa_value(const WeightedAutomaton& m, std::span<const Letter> w) {
  return dot(m.forward(w), m.final_weights());
}

inline Rational wfa_value(const WeightedAutomaton& m, std::string_view w) {
  return wfa_value(m, m.alphabet().parse(w));
}

/// Shortest-lex word on which the two automata assign different values, or
/// nothing if they define the same function. Explores the forward space of
/// the difference automaton; every word it returns has length < d1 + d2.
inline std::optional<Word> wfa_distinguish(const WeightedAutomaton& w1, const WeightedAutomaton& w2) {
  if (!(w1.alphabet() == w2.alphabet())) throw InvalidInput("wfa_distinguish: alphabet mismatch");
  const std::size_t d1 = w1.dimension(), d = d1 + w2.dimension();
  Vector gamma(d);
  for (std::size_t i = 0; i < d1; ++i) gamma[i] = w1.final_weights()[i];
  for (std::size_t i = d1; i < d; ++i) gamma[i] = -w2.final_weights()[i - d1];

  auto step = [&](const Vector& x, Letter a) {
    Vector lhs(x.begin(), x.begin() + d1), rhs(x.begin() + d1, x.end());
    lhs = times(lhs, w1.matrix(a));
    rhs = times(rhs, w2.matrix(a));
    lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    return lhs;
  };

  Vector start = w1.initial();
  start.insert(start.end(), w2.initial().begin(), w2.initial().end());

  // Candidates are visited in shortlex order; only those that enlarge the
  // span are expanded. A word outside the explored set is a combination of
  // shortlex-smaller explored words, so the first nonzero candidate is the
  // shortlex-least distinguishing word.
  SpanBasis basis(d);
  std::vector<std::pair<Word, Vector>> frontier{{Word{}, start}};
  while (!frontier.empty()) {
    std::vector<std::pair<Word, Vector>> next;
    for (auto& [word, x] : frontier) {
      if (dot(x, gamma) != 0) return word;
      if (!basis.insert(x)) continue;
      for (Letter a = 0; a < w1.alphabet().size(); ++a) next.emplace_back(append(word, a), step(x, a));
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

/// Dimension of span{ initial · M(w) : w ∈ Σ* }.
inline std::size_t reachable_dimension(const WeightedAutomaton& m) {
  SpanBasis basis(m.dimension());
  std::vector<Vector> frontier{m.initial()};
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& x : frontier)
      if (basis.insert(x))
        for (Letter a = 0; a < m.alphabet().size(); ++a) next.push_back(times(x, m.matrix(a)));
    frontier = std::move(next);
  }
  return basis.rank();
}

/// Dimension of span{ M(w) · final : w ∈ Σ* }.
inline std::size_t observable_dimension(const WeightedAutomaton& m) {
  SpanBasis basis(m.dimension());
  std::vector<Vector> frontier{m.final_weights()};
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& x : frontier)
      if (basis.insert(x))
        for (Letter a = 0; a < m.alphabet().size(); ++a) next.push_back(times(m.matrix(a), x));
    frontier = std::move(next);
  }
  return basis.rank();
}

/// The one-dimensional automaton of the zero function.
inline WeightedAutomaton zero_automaton(const Alphabet& alphabet) {
  return WeightedAutomaton(alphabet, Vector{Rational(0)}, std::vector<Matrix>(alphabet.size(), Matrix{Vector{Rational(0)}}),
                           Vector{Rational(0)});
}

/// Minimal iff both the reachable and the observable space are the whole
/// state space. The one-dimensional zero automaton counts as minimal: it is
/// the canonical representative of the zero function.
inline bool is_minimal(const WeightedAutomaton& m) {
  if (m.dimension() == 1 && !wfa_distinguish(m, zero_automaton(m.alphabet()))) return m == zero_automaton(m.alphabet());
  return reachable_dimension(m) == m.dimension() && observable_dimension(m) == m.dimension();
}

}  // namespace glstar
