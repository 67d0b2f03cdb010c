#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/table.hpp"
#include "glstar/teacher.hpp"

namespace glstar {

/// Requirements on a table domain: the word plumbing used by
/// ObservationTable plus the domain-specific closedness, consistency and
/// hypothesis construction.
template <class D>
concept TableDomain = requires(const D& d, const ObservationTable<D>& table, const typename D::Prefix& p,
                               const typename D::Hypothesis& h, const typename D::Query& q,
                               const ConsistencyDefect<typename D::Prefix, typename D::Suffix>& defect) {
  typename D::Machine;
  { d.represented(table, p) } -> std::convertible_to<bool>;
  { d.closedness_defects(table) };
  { d.consistency_defects(table) };
  { d.still_inconsistent(table, defect) } -> std::convertible_to<bool>;
  { d.make_hypothesis(table) } -> std::same_as<typename D::Hypothesis>;
  { D::machine_of(h) } -> std::convertible_to<const typename D::Machine&>;
  { d.evaluate(h, q) } -> std::convertible_to<typename D::Value>;
  { d.is_minimal(h) } -> std::convertible_to<bool>;
  { d.hypothesis_size(h) } -> std::convertible_to<std::size_t>;
  { d.row_measure(table) } -> std::convertible_to<std::size_t>;
  { d.column_measure(table) } -> std::convertible_to<std::size_t>;
  { d.suffix_mode_keeps_consistency(table) } -> std::convertible_to<bool>;
  { d.alphabet_size() } -> std::convertible_to<std::size_t>;
};

template <class D>
using TeacherFor = Teacher<typename D::Query, typename D::Value, typename D::Machine>;

struct LearnOptions {
  CounterexampleMode mode = CounterexampleMode::prefix;
  /// Cap on extension steps plus equivalence queries; 0 derives
  /// 10 · |alphabet| · state_guess.
  std::size_t max_rounds = 0;
  std::size_t state_guess = 64;
  /// 0 means unlimited.
  std::size_t max_membership_queries = 0;
  /// Verify the per-hypothesis invariants (minimality, agreement with the
  /// table, progress after counterexamples) and throw on violation.
  bool check_invariants = true;
};

struct LearnStats {
  std::size_t membership_queries = 0;
  std::size_t equivalence_queries = 0;
  std::size_t extend_s_calls = 0;
  std::size_t extend_t_calls = 0;
  std::size_t counterexamples = 0;
  std::size_t rounds = 0;
  std::size_t invariant_checks = 0;
  std::size_t consistency_defects_at_hypothesis = 0;
  std::vector<std::size_t> hypothesis_sizes;

  friend bool operator==(const LearnStats&, const LearnStats&) = default;
};

/// Adds, for every closedness defect in shortlex order of s·a, the word s·a
/// to S unless an earlier addition of this call already represents it.
/// Throws ContractViolation on a closed table or if the number of distinct
/// row classes fails to grow.
template <TableDomain D>
void extend_s(ObservationTable<D>& table) {
  const D& domain = table.domain();
  auto defects = domain.closedness_defects(table);
  if (defects.empty()) throw ContractViolation("extend_s called on a closed table");
  std::sort(defects.begin(), defects.end(),
            [](const auto& a, const auto& b) { return ShortlexLess{}(a.extension, b.extension); });
  std::size_t before = domain.row_measure(table);
  for (const auto& d : defects) {
    if (table.has_prefix(d.extension) || domain.represented(table, d.extension)) continue;
    table.add_prefix(d.extension);
  }
  table.fill();
  if (domain.row_measure(table) <= before) throw ContractViolation("extend_s did not enlarge the row classes");
}

/// Adds, for every consistency defect in shortlex order of its witness a·t,
/// the experiment a·t to T unless a column added earlier in this call
/// already resolves the defect.
template <TableDomain D>
void extend_t(ObservationTable<D>& table) {
  const D& domain = table.domain();
  auto defects = domain.consistency_defects(table);
  if (defects.empty()) throw ContractViolation("extend_t called on a consistent table");
  std::stable_sort(defects.begin(), defects.end(),
                   [](const auto& a, const auto& b) { return ShortlexLess{}(a.witness, b.witness); });
  std::size_t before = domain.column_measure(table);
  bool first = true;
  for (const auto& d : defects) {
    if (table.has_suffix(d.witness)) continue;
    if (!first && !domain.still_inconsistent(table, d)) continue;
    table.add_suffix(d.witness);
    table.fill();
    first = false;
  }
  if (domain.column_measure(table) <= before) throw ContractViolation("extend_t did not enlarge the column classes");
}

template <TableDomain D>
bool is_closed(const ObservationTable<D>& table) {
  return table.domain().closedness_defects(table).empty();
}

template <TableDomain D>
bool is_consistent(const ObservationTable<D>& table) {
  return table.domain().consistency_defects(table).empty();
}

/// Joins the counterexample into the table: all its prefixes into S in
/// prefix mode, all its suffixes into T in suffix mode.
template <TableDomain D>
void process_counterexample(ObservationTable<D>& table, const typename D::Query& ce, CounterexampleMode mode) {
  table.domain().validate(ce);
  if (mode == CounterexampleMode::prefix)
    table.add_prefix(ce);
  else
    for (const auto& t : table.domain().suffixes_of(ce)) table.add_suffix(t);
  table.fill();
}

/// Builds the hypothesis of a closed and consistent table.
template <TableDomain D>
typename D::Hypothesis build_hypothesis(const ObservationTable<D>& table) {
  return table.domain().make_hypothesis(table);
}

/// Checks that the hypothesis reproduces every cell of S × T.
template <TableDomain D>
bool agrees_with_table(const ObservationTable<D>& table, const typename D::Hypothesis& h) {
  const D& domain = table.domain();
  for (const auto& s : table.prefixes())
    for (const auto& t : table.suffixes())
      if (domain.compatible(s, t) && !(domain.evaluate(h, domain.concat(s, t)) == table.cell(s, t))) return false;
  return true;
}

template <class D>
struct LearnResult {
  typename D::Hypothesis hypothesis;
  LearnStats stats;
  ObservationTable<D> table;
};

/// The generalized L* loop over a table domain.
template <TableDomain D>
class Learner {
 public:
  using Hypothesis = typename D::Hypothesis;
  using Query = typename D::Query;
  using Observer = std::function<void(const ObservationTable<D>&, const Hypothesis&)>;

  Learner(D domain, const TeacherFor<D>& teacher, LearnOptions options = {})
      : teacher_(&teacher),
        options_(options),
        table_(std::move(domain), [t = &teacher](const Query& q) { return t->membership(q); },
               options.max_membership_queries) {
    if (options_.max_rounds == 0) options_.max_rounds = 10 * table_.domain().alphabet_size() * options_.state_guess;
  }

  /// Called with every hypothesis before it is submitted to the teacher.
  void on_hypothesis(Observer observer) { observer_ = std::move(observer); }

  const ObservationTable<D>& table() const { return table_; }
  const LearnStats& stats() const { return stats_; }

  LearnResult<D> run() {
    const D& domain = table_.domain();
    while (true) {
      // Step 1: close and make consistent, closedness first in every pass.
      while (true) {
        bool closed = is_closed(table_);
        if (!closed) {
          step();
          extend_s(table_);
          ++stats_.extend_s_calls;
        }
        bool consistent = is_consistent(table_);
        if (!consistent) {
          if (options_.check_invariants && options_.mode == CounterexampleMode::suffix &&
              domain.suffix_mode_keeps_consistency(table_))
            throw ContractViolation("suffix mode produced an inconsistent table");
          step();
          extend_t(table_);
          ++stats_.extend_t_calls;
        }
        if (closed && consistent) break;
      }

      // Step 2: hypothesis and equivalence query.
      stats_.consistency_defects_at_hypothesis += domain.consistency_defects(table_).size();
      Hypothesis h = build_hypothesis(table_);
      stats_.hypothesis_sizes.push_back(domain.hypothesis_size(h));
      if (options_.check_invariants) check_hypothesis(h);
      if (observer_) observer_(table_, h);

      step();
      ++stats_.rounds;
      ++stats_.equivalence_queries;
      std::optional<Query> ce = teacher_->equivalence(D::machine_of(h));
      if (!ce) {
        stats_.membership_queries = table_.membership_queries();
        return LearnResult<D>{std::move(h), stats_, table_};
      }

      domain.validate(*ce);
      if (domain.evaluate(h, *ce) == table_.lookup(*ce))
        throw TeacherError("counterexample '" + domain.format_query(*ce) + "' does not separate hypothesis and target");
      ++stats_.counterexamples;
      process_counterexample(table_, *ce, options_.mode);
      if (options_.check_invariants) {
        ++stats_.invariant_checks;
        if (is_closed(table_) && is_consistent(table_))
          throw ContractViolation("table closed and consistent right after counterexample '" +
                                  domain.format_query(*ce) + "'");
      }
      stats_.membership_queries = table_.membership_queries();
    }
  }

 private:
  void step() {
    std::size_t used = stats_.extend_s_calls + stats_.extend_t_calls + stats_.equivalence_queries;
    if (used >= options_.max_rounds)
      throw BudgetExceeded("round limit of " + std::to_string(options_.max_rounds) + " reached");
  }

  void check_hypothesis(const Hypothesis& h) {
    const D& domain = table_.domain();
    ++stats_.invariant_checks;
    if (!domain.is_minimal(h)) throw ContractViolation("hypothesis is not minimal");
    ++stats_.invariant_checks;
    if (!agrees_with_table(table_, h)) throw ContractViolation("hypothesis disagrees with the observation table");
  }

  const TeacherFor<D>* teacher_;
  LearnOptions options_;
  ObservationTable<D> table_;
  LearnStats stats_;
  Observer observer_;
};

/// Runs the learner to completion.
template <TableDomain D>
LearnResult<D> learn(D domain, const TeacherFor<D>& teacher, LearnOptions options = {}) {
  return Learner<D>(std::move(domain), teacher, options).run();
}

}  // namespace glstar
