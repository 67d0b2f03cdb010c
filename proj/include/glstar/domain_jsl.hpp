#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/moore.hpp"
#include "glstar/rfsa.hpp"
#include "glstar/table.hpp"
#include "glstar/word_domain.hpp"

namespace glstar {

using BitRow = std::vector<bool>;

inline bool row_leq(const BitRow& a, const BitRow& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

inline BitRow row_join(BitRow a, const BitRow& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
  return a;
}

/// A semilattice hypothesis: the deterministic machine over the join-closed
/// set of rows, and the residual automaton on its join-irreducible rows.
struct JslHypothesis {
  std::vector<BitRow> carrier;
  MooreMachine machine;
  /// Carrier indices of the join-irreducible rows, in carrier order; RFSA
  /// state i is carrier element irreducibles[i].
  std::vector<std::size_t> irreducibles;
  Rfsa rfsa;
};

/// Learning in join-semilattices: rows are ordered pointwise, a successor
/// row is represented when it is the join of the S-rows below it.
class JslDomain : public WordDomainBase {
 public:
  using Value = bool;
  using Machine = MooreMachine;
  using Hypothesis = JslHypothesis;
  using Table = ObservationTable<JslDomain>;
  using Defect = ConsistencyDefect<Prefix, Suffix>;

  static constexpr std::size_t default_carrier_cap = 4096;

  JslDomain() = default;
  explicit JslDomain(Alphabet alphabet, std::size_t carrier_cap = default_carrier_cap)
      : WordDomainBase(std::move(alphabet)), cap_(carrier_cap) {}

  std::string format_value(bool v) const { return v ? "1" : "0"; }

  bool represented(const Table& table, const Prefix& p) const {
    BitRow r = table.row(p).cells;
    return join_below(table, r) == r;
  }

  std::vector<ClosednessDefect<Prefix>> closedness_defects(const Table& table) const {
    return collect_closedness_defects(table);
  }

  /// A defect (s, a·t) says the column a·t cannot be a join-preserving
  /// function of the T-rows: s has a 1 there although its T-row lies below
  /// the join of the T-rows having 0 there. One defect per (s, a) with the
  /// shortlex-least witness.
  std::vector<Defect> consistency_defects(const Table& table) const {
    std::vector<Defect> out;
    for (const auto& s : table.prefixes())
      for (Letter a : letters_) {
        std::optional<Defect> best;
        for (const auto& t : table.suffixes()) {
          if (!violates(table, s, a, t)) continue;
          Word witness = prepend(a, t);
          if (!best || shortlex_less(witness, best->witness)) best = Defect{s, std::nullopt, a, t, witness};
        }
        if (best) out.push_back(*best);
      }
    return out;
  }

  bool still_inconsistent(const Table& table, const Defect& d) const {
    return violates(table, d.first, d.letter, d.experiment);
  }

  /// Carrier = join-closure of the S-rows plus the empty join; the
  /// a-successor of r is the join of row(s·a) over the s with row(s) ≤ r.
  JslHypothesis make_hypothesis(const Table& table) const {
    const auto& S = table.prefixes();
    const std::size_t width = table.suffixes().size();
    std::vector<BitRow> generators;
    std::map<BitRow, std::size_t> index;
    auto add = [&](const BitRow& r) {
      if (index.emplace(r, generators.size()).second) generators.push_back(r);
    };
    for (const auto& s : S) add(table.row(s).cells);
    std::vector<BitRow> carrier = generators;
    if (carrier.size() > cap_) throw BudgetExceeded("join-closure exceeds " + std::to_string(cap_) + " rows");
    const std::size_t n_generators = generators.size();
    for (std::size_t i = 0; i < carrier.size(); ++i)
      for (std::size_t g = 0; g < n_generators; ++g) {
        BitRow j = row_join(carrier[i], generators[g]);
        if (index.emplace(j, carrier.size()).second) {
          carrier.push_back(std::move(j));
          if (carrier.size() > cap_) throw BudgetExceeded("join-closure exceeds " + std::to_string(cap_) + " rows");
        }
      }
    BitRow bottom(width, false);
    if (index.emplace(bottom, carrier.size()).second) carrier.push_back(bottom);

    const std::size_t eps = table.empty_experiment(0);
    const std::size_t k = alphabet_.size();
    std::vector<State> delta(carrier.size() * k);
    std::vector<bool> out(carrier.size());
    for (std::size_t q = 0; q < carrier.size(); ++q) {
      out[q] = carrier[q][eps];
      for (Letter a : letters_) {
        BitRow next = bottom;
        for (const auto& s : S)
          if (row_leq(table.row(s).cells, carrier[q])) next = row_join(next, table.row(append(s, a)).cells);
        auto it = index.find(next);
        if (it == index.end()) throw ContractViolation("hypothesis: successor row outside the join-closure");
        delta[q * k + a] = it->second;
      }
    }
    State init = index.at(table.row(Word{}).cells);
    MooreMachine machine(alphabet_, carrier.size(), init, std::move(delta), std::move(out));

    std::vector<std::size_t> irreducible;
    for (std::size_t q = 0; q < carrier.size(); ++q) {
      if (carrier[q] == bottom) continue;
      BitRow below = bottom;
      for (const auto& x : carrier)
        if (x != carrier[q] && row_leq(x, carrier[q])) below = row_join(below, x);
      if (below != carrier[q]) irreducible.push_back(q);
    }

    Rfsa rfsa;
    rfsa.alphabet = alphabet_;
    rfsa.states = irreducible.size();
    rfsa.transitions.assign(irreducible.size(), std::vector<std::vector<State>>(k));
    for (std::size_t i = 0; i < irreducible.size(); ++i) {
      const BitRow& j = carrier[irreducible[i]];
      rfsa.accepting.push_back(j[eps]);
      if (row_leq(j, carrier[init])) rfsa.initial.push_back(i);
      for (Letter a : letters_) {
        const BitRow& target = carrier[machine.next(irreducible[i], a)];
        for (std::size_t i2 = 0; i2 < irreducible.size(); ++i2)
          if (row_leq(carrier[irreducible[i2]], target)) rfsa.transitions[i][a].push_back(i2);
      }
    }
    return JslHypothesis{std::move(carrier), std::move(machine), std::move(irreducible), std::move(rfsa)};
  }

  static const MooreMachine& machine_of(const JslHypothesis& h) { return h.machine; }
  bool evaluate(const JslHypothesis& h, const Query& w) const { return run_moore(h.machine, w); }

  /// Every carrier element has its own language, and the carrier is
  /// generated under joins by the deterministically reachable elements.
  bool is_minimal(const JslHypothesis& h) const {
    if (count_distinguishable(h.machine) != h.carrier.size()) return false;
    std::vector<BitRow> reached;
    for (State q : detail::bfs_order(h.machine)) reached.push_back(h.carrier[q]);
    std::map<BitRow, bool> closure;
    closure.emplace(BitRow(h.carrier.front().size(), false), true);
    std::vector<BitRow> todo(reached);
    for (const auto& r : reached) closure.emplace(r, true);
    for (std::size_t i = 0; i < todo.size(); ++i)
      for (const auto& r : reached) {
        BitRow j = row_join(todo[i], r);
        if (closure.emplace(j, true).second) todo.push_back(std::move(j));
      }
    return closure.size() == h.carrier.size();
  }

  std::size_t hypothesis_size(const JslHypothesis& h) const { return h.carrier.size(); }
  std::size_t row_measure(const Table& table) const { return distinct_rows(table); }
  std::size_t column_measure(const Table& table) const { return distinct_columns(table); }
  bool suffix_mode_keeps_consistency(const Table&) const { return false; }

 private:
  BitRow join_below(const Table& table, const BitRow& r) const {
    BitRow acc(r.size(), false);
    for (const auto& s : table.prefixes()) {
      BitRow x = table.row(s).cells;
      if (row_leq(x, r)) acc = row_join(acc, x);
    }
    return acc;
  }

  bool violates(const Table& table, const Word& s, Letter a, const Word& t) const {
    if (!table.cell(append(s, a), t)) return false;
    BitRow zeros(table.suffixes().size(), false);
    for (const auto& s2 : table.prefixes())
      if (!table.cell(append(s2, a), t)) zeros = row_join(zeros, table.row(s2).cells);
    return row_leq(table.row(s).cells, zeros);
  }

  std::size_t cap_ = default_carrier_cap;
};

}  // namespace glstar
