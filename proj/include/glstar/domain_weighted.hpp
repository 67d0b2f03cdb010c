#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/rational.hpp"
#include "glstar/table.hpp"
#include "glstar/weighted.hpp"
#include "glstar/word_domain.hpp"

namespace glstar {

/// Learning over vector spaces of rational functions. Rows are rational
/// vectors over T; a successor row is represented when it lies in the span
/// of the S-rows; hypotheses are weighted automata on a row basis.
///
/// The basis is the greedy independent subset of S. Consistency requires
/// each linear relation among S-rows to survive one more letter. Such
/// relations come from prefix-mode counterexamples, and also from a zero
/// row of the empty word, which suffix mode does not rule out.
class WeightedDomain : public WordDomainBase {
 public:
  using Value = Rational;
  using Machine = WeightedAutomaton;
  using Hypothesis = WeightedAutomaton;
  using Table = ObservationTable<WeightedDomain>;
  using Defect = ConsistencyDefect<Prefix, Suffix>;

  using WordDomainBase::WordDomainBase;

  std::string format_value(const Rational& v) const { return format_rational(v); }

  template <class Membership>
  static Vector weighted_row(const Word& w, const std::vector<Word>& experiments, Membership&& membership) {
    Vector out;
    for (const auto& t : experiments) out.push_back(Rational(membership(glstar::concat(w, t))));
    return out;
  }

  bool represented(const Table& table, const Prefix& p) const {
    return span_of_s(table).contains(table.row(p).cells);
  }

  std::vector<ClosednessDefect<Prefix>> closedness_defects(const Table& table) const {
    SpanBasis span = span_of_s(table);
    std::vector<ClosednessDefect<Prefix>> out;
    for (const auto& e : table.extensions()) {
      if (table.has_prefix(e.word)) continue;
      if (!span.contains(table.row(e.word).cells)) out.push_back({table.prefixes()[e.prefix], e.letter, e.word});
    }
    return out;
  }

  /// Indices into S of the greedy basis (first occurrence order).
  std::vector<std::size_t> basis_indices(const Table& table) const {
    SpanBasis span(table.suffixes().size());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < table.prefixes().size(); ++i)
      if (span.insert(table.row(table.prefixes()[i]).cells)) out.push_back(i);
    return out;
  }

  /// For every non-basis s and letter a: the relation row(s) = Σ c_i row(b_i)
  /// over T must also hold for the columns a·T. Empty under basis discipline.
  std::vector<Defect> consistency_defects(const Table& table) const {
    std::vector<Defect> out;
    auto basis = basis_indices(table);
    SpanBasis span = span_from(table, basis);
    const auto& S = table.prefixes();
    std::size_t next_basis = 0;
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (next_basis < basis.size() && basis[next_basis] == i) {
        ++next_basis;
        continue;
      }
      auto coeffs = span.coordinates(table.row(S[i]).cells);
      if (!coeffs) throw ContractViolation("weighted table: S-row outside the basis span");
      for (Letter a : letters_) {
        std::optional<Defect> best;
        for (const auto& t : table.suffixes()) {
          if (relation_holds(table, S[i], basis, *coeffs, a, t)) continue;
          Word witness = prepend(a, t);
          if (!best || shortlex_less(witness, best->witness)) best = Defect{S[i], std::nullopt, a, t, witness};
        }
        if (best) out.push_back(*best);
      }
    }
    return out;
  }

  bool still_inconsistent(const Table& table, const Defect& d) const {
    auto basis = basis_indices(table);
    for (auto i : basis)
      if (table.prefixes()[i] == d.first) return false;
    auto coeffs = span_from(table, basis).coordinates(table.row(d.first).cells);
    if (!coeffs) return false;
    return !relation_holds(table, d.first, basis, *coeffs, d.letter, d.experiment);
  }

  /// Dimension = number of basis rows; M(a) row i expresses row(b_i a) in
  /// the basis; initial = coordinates of row(ε); final_i = row(b_i)(ε).
  WeightedAutomaton make_hypothesis(const Table& table) const {
    auto basis = basis_indices(table);
    if (basis.empty()) return zero_automaton(alphabet_);
    SpanBasis span = span_from(table, basis);
    const auto& S = table.prefixes();
    const auto& eps = table.suffixes()[table.empty_experiment(0)];
    auto coords = [&](const Word& w) {
      auto c = span.coordinates(table.row(w).cells);
      if (!c) throw ContractViolation("hypothesis: table not closed at '" + format_prefix(w) + "'");
      return *c;
    };
    std::vector<Matrix> mats(alphabet_.size());
    for (Letter a : letters_)
      for (auto i : basis) mats[a].push_back(coords(append(S[i], a)));
    Vector fin;
    for (auto i : basis) fin.push_back(table.cell(S[i], eps));
    return WeightedAutomaton(alphabet_, coords(Word{}), std::move(mats), std::move(fin));
  }

  static const WeightedAutomaton& machine_of(const WeightedAutomaton& h) { return h; }
  Rational evaluate(const WeightedAutomaton& h, const Query& w) const { return wfa_value(h, w); }
  bool is_minimal(const WeightedAutomaton& h) const { return glstar::is_minimal(h); }
  std::size_t hypothesis_size(const WeightedAutomaton& h) const { return h.dimension(); }
  std::size_t row_measure(const Table& table) const { return span_of_s(table).rank(); }
  std::size_t column_measure(const Table& table) const { return span_of_s(table).rank(); }
  /// Rows added by closedness lie outside the span, so once the S-rows are
  /// independent they stay so. Only a zero row of ε breaks this.
  bool suffix_mode_keeps_consistency(const Table& table) const {
    return basis_indices(table).size() == table.prefixes().size();
  }

 private:
  SpanBasis span_of_s(const Table& table) const {
    SpanBasis span(table.suffixes().size());
    for (const auto& s : table.prefixes()) span.insert(table.row(s).cells);
    return span;
  }

  SpanBasis span_from(const Table& table, const std::vector<std::size_t>& basis) const {
    SpanBasis span(table.suffixes().size());
    for (auto i : basis) span.insert(table.row(table.prefixes()[i]).cells);
    return span;
  }

  bool relation_holds(const Table& table, const Word& s, const std::vector<std::size_t>& basis, const Vector& coeffs,
                      Letter a, const Word& t) const {
    Rational rhs = 0;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs[k] != 0) rhs += coeffs[k] * table.cell(append(table.prefixes()[basis[k]], a), t);
    return table.cell(append(s, a), t) == rhs;
  }
};

}  // namespace glstar
