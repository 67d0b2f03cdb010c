#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/moore.hpp"
#include "glstar/table.hpp"
#include "glstar/word_domain.hpp"

namespace glstar {

/// Classical DFA learning: rows are bit vectors h(s)(t) = L(st), closedness
/// and consistency are row equalities, hypotheses are DFAs on row classes.
class BoolDomain : public WordDomainBase {
 public:
  using Value = bool;
  using Machine = MooreMachine;
  using Hypothesis = MooreMachine;
  using Table = ObservationTable<BoolDomain>;
  using Row = TableRow<bool>;
  using Defect = ConsistencyDefect<Prefix, Suffix>;

  using WordDomainBase::WordDomainBase;

  std::string format_value(bool v) const { return v ? "1" : "0"; }

  /// Row of w over T, querying `membership` for every cell.
  template <class Membership>
  static std::vector<bool> bool_row(const Word& w, const std::vector<Word>& experiments, Membership&& membership) {
    std::vector<bool> bits;
    for (const auto& t : experiments) bits.push_back(static_cast<bool>(membership(glstar::concat(w, t))));
    return bits;
  }

  bool represented(const Table& table, const Prefix& p) const {
    Row r = table.row(p);
    for (const auto& s : table.prefixes())
      if (table.row(s) == r) return true;
    return false;
  }

  std::vector<ClosednessDefect<Prefix>> closedness_defects(const Table& table) const {
    std::set<Row> rows;
    for (const auto& s : table.prefixes()) rows.insert(table.row(s));
    std::vector<ClosednessDefect<Prefix>> out;
    for (const auto& e : table.extensions()) {
      if (table.has_prefix(e.word)) continue;
      if (!rows.count(table.row(e.word))) out.push_back({table.prefixes()[e.prefix], e.letter, e.word});
    }
    return out;
  }

  /// Pairs s, s' with equal rows whose a-successors differ at some t in T;
  /// one defect per (s, s', a) carrying the shortlex-least witness a·t.
  std::vector<Defect> consistency_defects(const Table& table) const {
    std::vector<Defect> out;
    std::map<Row, std::size_t> first;  // row -> first index in S
    const auto& S = table.prefixes();
    for (std::size_t j = 0; j < S.size(); ++j) {
      auto [it, fresh] = first.emplace(table.row(S[j]), j);
      if (fresh) continue;
      const Word& s = S[it->second];
      const Word& s2 = S[j];
      for (Letter a : letters_) {
        std::optional<Defect> best;
        for (const auto& t : table.suffixes()) {
          if (table.cell(append(s, a), t) == table.cell(append(s2, a), t)) continue;
          Word witness = prepend(a, t);
          if (!best || shortlex_less(witness, best->witness)) best = Defect{s, s2, a, t, witness};
        }
        if (best) out.push_back(*best);
      }
    }
    return out;
  }

  bool still_inconsistent(const Table& table, const Defect& d) const {
    if (!d.second || !(table.row(d.first) == table.row(*d.second))) return false;
    return table.cell(append(d.first, d.letter), d.experiment) != table.cell(append(*d.second, d.letter), d.experiment);
  }

  /// States are the row classes of S in order of first occurrence; the
  /// initial state is the class of ε; a state is final iff its row has 1
  /// at the empty experiment.
  MooreMachine make_hypothesis(const Table& table) const {
    std::map<Row, State> cls;
    std::vector<Word> rep;
    for (const auto& s : table.prefixes())
      if (cls.emplace(table.row(s), rep.size()).second) rep.push_back(s);
    const std::size_t eps = table.empty_experiment(0);
    std::vector<State> delta(rep.size() * alphabet_.size());
    std::vector<bool> out(rep.size());
    for (State q = 0; q < rep.size(); ++q) out[q] = table.cell(rep[q], table.suffixes()[eps]);
    for (const auto& s : table.prefixes()) {
      State q = cls.at(table.row(s));
      for (Letter a : letters_) {
        auto it = cls.find(table.row(append(s, a)));
        if (it == cls.end()) throw ContractViolation("hypothesis: table not closed at '" + format_prefix(append(s, a)) + "'");
        State& slot = delta[q * alphabet_.size() + a];
        if (s != rep[q] && slot != it->second)
          throw ContractViolation("hypothesis: transition ill-defined at '" + format_prefix(s) + "'");
        slot = it->second;
      }
    }
    return MooreMachine(alphabet_, rep.size(), cls.at(table.row(Word{})), std::move(delta), std::move(out));
  }

  static const MooreMachine& machine_of(const MooreMachine& h) { return h; }
  bool evaluate(const MooreMachine& h, const Query& w) const { return run_moore(h, w); }
  bool is_minimal(const MooreMachine& h) const { return glstar::is_minimal(h); }
  std::size_t hypothesis_size(const MooreMachine& h) const { return h.size(); }
  std::size_t row_measure(const Table& table) const { return distinct_rows(table); }
  std::size_t column_measure(const Table& table) const { return distinct_columns(table); }
  bool suffix_mode_keeps_consistency(const Table&) const { return true; }
};

}  // namespace glstar
