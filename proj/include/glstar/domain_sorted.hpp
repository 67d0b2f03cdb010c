#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/sorted.hpp"
#include "glstar/table.hpp"

namespace glstar {

/// Learning sorted machines: access words start with a generator,
/// experiments start at a sort, and rows are only compared within a sort.
class SortedDomain {
 public:
  using Prefix = SortedWord;
  using Suffix = SortedExperiment;
  using Query = SortedWord;
  using Value = bool;
  using Machine = SortedMachine;
  using Hypothesis = SortedMachine;
  using Table = ObservationTable<SortedDomain>;
  using Row = TableRow<bool>;
  using Defect = ConsistencyDefect<Prefix, Suffix>;

  SortedDomain() = default;
  explicit SortedDomain(SortedAlphabet alphabet) : sigma_(std::move(alphabet)) {
    into_.assign(sigma_.sort_count(), {});
    for (Letter a = 0; a < sigma_.letter_count(); ++a) into_[sigma_.letter(a).to].push_back(a);
  }

  const SortedAlphabet& alphabet() const { return sigma_; }
  std::size_t alphabet_size() const { return sigma_.letter_count(); }

  std::vector<Prefix> initial_prefixes() const {
    std::vector<Prefix> out;
    for (std::size_t g = 0; g < sigma_.generator_count(); ++g) out.push_back({g, {}});
    return out;
  }

  std::vector<Suffix> initial_suffixes() const {
    std::vector<Suffix> out;
    for (Sort s = 0; s < sigma_.sort_count(); ++s) out.push_back({s, {}});
    return out;
  }

  /// Truncations of w keeping its generator.
  std::vector<Prefix> prefixes_of(const Query& w) const {
    std::vector<Prefix> out;
    for (std::size_t k = 0; k <= w.letters.size(); ++k)
      out.push_back({w.generator, Word(w.letters.begin(), w.letters.begin() + static_cast<long>(k))});
    return out;
  }

  /// Left truncations of the letters of w with their start sorts; the last
  /// one is the empty experiment at the end sort of w.
  std::vector<Suffix> suffixes_of(const Query& w) const {
    std::vector<Suffix> out;
    Sort s = sigma_.generator(w.generator).sort;
    for (std::size_t k = 0; k <= w.letters.size(); ++k) {
      out.push_back({s, Word(w.letters.begin() + static_cast<long>(k), w.letters.end())});
      if (k < w.letters.size()) s = sigma_.letter(w.letters[k]).to;
    }
    return out;
  }

  std::vector<Suffix> suffixes_of(const Suffix& t) const {
    std::vector<Suffix> out;
    Sort s = t.start;
    for (std::size_t k = 0; k <= t.letters.size(); ++k) {
      out.push_back({s, Word(t.letters.begin() + static_cast<long>(k), t.letters.end())});
      if (k < t.letters.size()) s = sigma_.letter(t.letters[k]).to;
    }
    return out;
  }

  const std::vector<Letter>& letters_after(const Prefix& p) const { return sigma_.letters_from(sort_of(p)); }
  const std::vector<Letter>& letters_before(const Suffix& t) const { return into_.at(t.start); }
  Prefix extend_prefix(const Prefix& p, Letter a) const { return {p.generator, append(p.letters, a)}; }
  Suffix extend_suffix(Letter a, const Suffix& t) const { return {sigma_.letter(a).from, prepend(a, t.letters)}; }
  bool compatible(const Prefix& p, const Suffix& t) const { return sort_of(p) == t.start; }
  Query concat(const Prefix& p, const Suffix& t) const { return {p.generator, glstar::concat(p.letters, t.letters)}; }
  Sort sort_of(const Prefix& p) const { return end_sort(sigma_, p); }
  Sort suffix_sort(const Suffix& t) const { return t.start; }
  bool is_empty_suffix(const Suffix& t) const { return t.letters.empty(); }

  void validate(const Query& w) const { end_sort(sigma_, w); }

  std::string format_prefix(const Prefix& p) const { return format_sorted_word(sigma_, p); }
  std::string format_query(const Query& q) const { return format_sorted_word(sigma_, q); }
  std::string format_suffix(const Suffix& t) const {
    std::string out = sigma_.sort_name(t.start) + ":";
    if (t.letters.empty()) return out + "ε";
    for (std::size_t i = 0; i < t.letters.size(); ++i) out += (i ? " " : "") + sigma_.letter(t.letters[i]).name;
    return out;
  }
  std::string format_value(bool v) const { return v ? "1" : "0"; }

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

  /// As in the one-sorted case, with letters restricted to the common end
  /// sort and experiments to the letter's target sort.
  std::vector<Defect> consistency_defects(const Table& table) const {
    std::vector<Defect> out;
    std::map<Row, std::size_t> first;
    const auto& S = table.prefixes();
    for (std::size_t j = 0; j < S.size(); ++j) {
      auto [it, fresh] = first.emplace(table.row(S[j]), j);
      if (fresh) continue;
      const Prefix& s = S[it->second];
      const Prefix& s2 = S[j];
      for (Letter a : letters_after(s)) {
        std::optional<Defect> best;
        for (const auto& t : table.suffixes()) {
          if (t.start != sigma_.letter(a).to) continue;
          if (table.cell(extend_prefix(s, a), t) == table.cell(extend_prefix(s2, a), t)) continue;
          Suffix witness = extend_suffix(a, t);
          if (!best || witness < best->witness) best = Defect{s, s2, a, t, witness};
        }
        if (best) out.push_back(*best);
      }
    }
    return out;
  }

  bool still_inconsistent(const Table& table, const Defect& d) const {
    if (!d.second || !(table.row(d.first) == table.row(*d.second))) return false;
    return table.cell(extend_prefix(d.first, d.letter), d.experiment) !=
           table.cell(extend_prefix(*d.second, d.letter), d.experiment);
  }

  /// Per sort, states are the row classes of that sort in order of first
  /// occurrence in S.
  SortedMachine make_hypothesis(const Table& table) const {
    const std::size_t nsorts = sigma_.sort_count();
    std::map<Row, State> cls;
    std::vector<std::vector<Prefix>> rep(nsorts);
    for (const auto& s : table.prefixes()) {
      Sort so = sort_of(s);
      if (cls.emplace(table.row(s), rep[so].size()).second) rep[so].push_back(s);
    }
    std::vector<std::size_t> counts;
    std::vector<std::vector<bool>> out(nsorts);
    for (Sort so = 0; so < nsorts; ++so) {
      counts.push_back(rep[so].size());
      if (rep[so].empty()) continue;
      const auto& eps = table.suffixes()[table.empty_experiment(so)];
      for (const auto& r : rep[so]) out[so].push_back(table.cell(r, eps));
    }
    std::vector<std::vector<State>> delta(sigma_.letter_count());
    for (Letter a = 0; a < sigma_.letter_count(); ++a) delta[a].assign(counts[sigma_.letter(a).from], 0);
    std::vector<std::vector<bool>> set(sigma_.letter_count());
    for (Letter a = 0; a < sigma_.letter_count(); ++a) set[a].assign(counts[sigma_.letter(a).from], false);
    for (const auto& s : table.prefixes()) {
      State q = cls.at(table.row(s));
      for (Letter a : letters_after(s)) {
        Prefix sa = extend_prefix(s, a);
        auto it = cls.find(table.row(sa));
        if (it == cls.end()) throw ContractViolation("hypothesis: table not closed at '" + format_prefix(sa) + "'");
        if (set[a][q] && delta[a][q] != it->second)
          throw ContractViolation("hypothesis: transition ill-defined at '" + format_prefix(s) + "'");
        delta[a][q] = it->second;
        set[a][q] = true;
      }
    }
    std::vector<State> init;
    for (std::size_t g = 0; g < sigma_.generator_count(); ++g) init.push_back(cls.at(table.row(Prefix{g, {}})));
    return SortedMachine(sigma_, std::move(counts), std::move(init), std::move(delta), std::move(out));
  }

  static const SortedMachine& machine_of(const SortedMachine& h) { return h; }
  bool evaluate(const SortedMachine& h, const Query& w) const { return run_sorted(h, w).output; }
  bool is_minimal(const SortedMachine& h) const { return glstar::is_minimal(h); }
  std::size_t hypothesis_size(const SortedMachine& h) const { return h.total_states(); }
  std::size_t row_measure(const Table& table) const { return distinct_rows(table); }
  std::size_t column_measure(const Table& table) const { return distinct_columns(table); }

  /// Distinct rows enter S only through closedness, except that two
  /// generators of one sort may start out with equal rows.
  bool suffix_mode_keeps_consistency(const Table&) const {
    std::vector<std::size_t> per_sort(sigma_.sort_count(), 0);
    for (const auto& g : sigma_.generators())
      if (++per_sort[g.sort] > 1) return false;
    return true;
  }

 private:
  SortedAlphabet sigma_;
  std::vector<std::vector<Letter>> into_;
};

}  // namespace glstar
