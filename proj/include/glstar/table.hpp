#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/sorted.hpp"
#include "glstar/word.hpp"

namespace glstar {

/// Strict shortlex order used for every ordered container of words in the
/// learner. Plain words compare by length then letters; sorted words carry
/// their own shortlex `<=>`.
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
  bool operator()(const SortedWord& a, const SortedWord& b) const { return a < b; }
  bool operator()(const SortedExperiment& a, const SortedExperiment& b) const { return a < b; }
};

/// Values of one access word over the experiments T, in T's insertion order.
/// Columns whose start sort differs from `sort` hold a default value.
template <class Value>
struct TableRow {
  Sort sort = 0;
  std::vector<Value> cells;

  friend bool operator==(const TableRow&, const TableRow&) = default;
  friend bool operator<(const TableRow& a, const TableRow& b) {
    if (a.sort != b.sort) return a.sort < b.sort;
    return a.cells < b.cells;
  }
};

/// (s, a) with s in S whose successor row sa is not represented by S.
template <class Prefix>
struct ClosednessDefect {
  Prefix prefix;
  Letter letter = 0;
  Prefix extension;
};

/// Witness that the table is not consistent: the experiment a·t separates
/// `first` from what its row claims (for pairwise domains, from `second`).
template <class Prefix, class Suffix>
struct ConsistencyDefect {
  Prefix first;
  std::optional<Prefix> second;
  Letter letter = 0;
  Suffix experiment;
  Suffix witness;
};

enum class CounterexampleMode { prefix, suffix };

/// The pair (S, T) of access words and experiments together with the memo
/// of membership answers. S stays prefix-closed and T suffix-closed; both
/// only grow, as does the cache.
template <class Domain>
class ObservationTable {
 public:
  using Prefix = typename Domain::Prefix;
  using Suffix = typename Domain::Suffix;
  using Query = typename Domain::Query;
  using Value = typename Domain::Value;
  using Row = TableRow<Value>;
  using Oracle = std::function<Value(const Query&)>;

  struct Extension {
    std::size_t prefix;  // index into S
    Letter letter;
    Prefix word;
  };

  /// Initializes S and T from the domain's input and output objects and
  /// fills the table. `query_budget` of 0 means unlimited.
  ObservationTable(Domain domain, Oracle membership, std::size_t query_budget = 0)
      : domain_(std::move(domain)), oracle_(std::move(membership)), budget_(query_budget) {
    for (const auto& p : domain_.initial_prefixes()) insert_prefix(p);
    for (const auto& t : domain_.initial_suffixes()) insert_suffix(t);
    fill();
  }

  const Domain& domain() const { return domain_; }
  const std::vector<Prefix>& prefixes() const { return s_; }
  const std::vector<Suffix>& suffixes() const { return t_; }
  bool has_prefix(const Prefix& p) const { return s_set_.count(p) > 0; }
  bool has_suffix(const Suffix& t) const { return t_set_.count(t) > 0; }
  std::size_t membership_queries() const { return queries_; }
  std::size_t cache_size() const { return cache_.size(); }

  /// Adds p together with all of its prefixes. Returns the number of new
  /// access words. Call fill() afterwards.
  std::size_t add_prefix(const Prefix& p) {
    std::size_t added = 0;
    for (const auto& q : domain_.prefixes_of(p)) added += insert_prefix(q) ? 1 : 0;
    return added;
  }

  /// Adds t together with all of its suffixes.
  std::size_t add_suffix(const Suffix& t) {
    std::size_t added = 0;
    for (const auto& u : domain_.suffixes_of(t)) added += insert_suffix(u) ? 1 : 0;
    return added;
  }

  /// One-step extensions s·a for every s in S and every letter readable
  /// after s, in S order then letter order.
  std::vector<Extension> extensions() const {
    std::vector<Extension> out;
    for (std::size_t i = 0; i < s_.size(); ++i)
      for (Letter a : domain_.letters_after(s_[i])) out.push_back({i, a, domain_.extend_prefix(s_[i], a)});
    return out;
  }

  /// Candidate experiments a·t for t in T that are not yet in T, shortlex
  /// ordered and deduplicated.
  std::vector<Suffix> extended_suffixes() const {
    std::set<Suffix, ShortlexLess> out;
    for (const auto& t : t_)
      for (Letter a : domain_.letters_before(t)) {
        Suffix at = domain_.extend_suffix(a, t);
        if (!has_suffix(at)) out.insert(std::move(at));
      }
    return {out.begin(), out.end()};
  }

  /// Queries every cell of (S ∪ S·Σ) × T that is not cached yet. Cells of
  /// S × Σ·T coincide with cells of S·Σ × T, so this also covers the rows
  /// the consistency check needs.
  void fill() {
    for (const auto& s : s_) fill_row(s);
    for (const auto& e : extensions()) fill_row(e.word);
  }

  /// Cached value of the query p·t; asks the teacher on a miss.
  Value value(const Prefix& p, const Suffix& t) {
    Query q = domain_.concat(p, t);
    auto it = cache_.find(q);
    if (it != cache_.end()) return it->second;
    return ask(q);
  }

  /// Cached value of p·t. The cell must be filled.
  const Value& cell(const Prefix& p, const Suffix& t) const {
    auto it = cache_.find(domain_.concat(p, t));
    if (it == cache_.end()) throw ContractViolation("observation table cell '" + domain_.format_query(domain_.concat(p, t)) + "' not filled");
    return it->second;
  }

  bool has_cell(const Query& q) const { return cache_.count(q) > 0; }

  /// Membership of an arbitrary query through the cache.
  Value lookup(const Query& q) {
    auto it = cache_.find(q);
    if (it != cache_.end()) return it->second;
    return ask(q);
  }

  /// Row of p over the current T.
  Row row(const Prefix& p) const {
    Row r{domain_.sort_of(p), {}};
    r.cells.reserve(t_.size());
    for (const auto& t : t_) r.cells.push_back(domain_.compatible(p, t) ? cell(p, t) : Value{});
    return r;
  }

  /// Index of the empty experiment at sort s in T.
  std::size_t empty_experiment(Sort s) const {
    for (std::size_t j = 0; j < t_.size(); ++j)
      if (domain_.is_empty_suffix(t_[j]) && domain_.suffix_sort(t_[j]) == s) return j;
    throw ContractViolation("T lacks the empty experiment");
  }

  /// Deterministic text rendering of S, T and the S ∪ S·Σ cells; two
  /// tables with equal dumps are observationally identical.
  std::string dump() const {
    std::ostringstream os;
    os << "S:";
    for (const auto& s : s_) os << " [" << domain_.format_prefix(s) << "]";
    os << "\nT:";
    for (const auto& t : t_) os << " [" << domain_.format_suffix(t) << "]";
    os << "\n";
    auto print = [&](const Prefix& p) {
      os << domain_.format_prefix(p) << " |";
      for (const auto& t : t_) {
        os << ' ';
        if (!domain_.compatible(p, t)) {
          os << '-';
          continue;
        }
        os << domain_.format_value(cell(p, t));
      }
      os << "\n";
    };
    for (const auto& s : s_) print(s);
    os << "--\n";
    for (const auto& e : extensions())
      if (!has_prefix(e.word)) print(e.word);
    return os.str();
  }

 private:
  bool insert_prefix(const Prefix& p) {
    if (!s_set_.insert(p).second) return false;
    s_.push_back(p);
    return true;
  }

  bool insert_suffix(const Suffix& t) {
    if (!t_set_.insert(t).second) return false;
    t_.push_back(t);
    return true;
  }

  void fill_row(const Prefix& p) {
    for (const auto& t : t_)
      if (domain_.compatible(p, t)) value(p, t);
  }

  Value ask(const Query& q) {
    if (budget_ != 0 && queries_ >= budget_)
      throw BudgetExceeded("membership query budget of " + std::to_string(budget_) + " exhausted");
    ++queries_;
    Value v = oracle_(q);
    cache_.emplace(q, v);
    return v;
  }

  Domain domain_;
  Oracle oracle_;
  std::size_t budget_ = 0;
  std::size_t queries_ = 0;
  std::vector<Prefix> s_;
  std::set<Prefix, ShortlexLess> s_set_;
  std::vector<Suffix> t_;
  std::set<Suffix, ShortlexLess> t_set_;
  std::map<Query, Value, ShortlexLess> cache_;
};

/// Closedness defects computed from a domain's notion of "represented".
/// Shared by the domains; one entry per extension s·a not in S whose row
/// the domain does not consider represented.
template <class Domain>
std::vector<ClosednessDefect<typename Domain::Prefix>> collect_closedness_defects(const ObservationTable<Domain>& table) {
  std::vector<ClosednessDefect<typename Domain::Prefix>> out;
  for (const auto& e : table.extensions()) {
    if (table.has_prefix(e.word)) continue;
    if (!table.domain().represented(table, e.word)) out.push_back({table.prefixes()[e.prefix], e.letter, e.word});
  }
  return out;
}

/// Distinct rows among S.
template <class Domain>
std::size_t distinct_rows(const ObservationTable<Domain>& table) {
  std::set<typename ObservationTable<Domain>::Row> rows;
  for (const auto& s : table.prefixes()) rows.insert(table.row(s));
  return rows.size();
}

/// Distinct columns of the S × T block (incompatible cells read as default).
template <class Domain>
std::size_t distinct_columns(const ObservationTable<Domain>& table) {
  using Value = typename Domain::Value;
  std::set<std::pair<Sort, std::vector<Value>>> cols;
  const auto& d = table.domain();
  for (const auto& t : table.suffixes()) {
    std::vector<Value> col;
    for (const auto& s : table.prefixes()) col.push_back(d.compatible(s, t) ? table.cell(s, t) : Value{});
    cols.emplace(d.suffix_sort(t), std::move(col));
  }
  return cols.size();
}

}  // namespace glstar
