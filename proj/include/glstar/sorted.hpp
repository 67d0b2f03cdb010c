#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/moore.hpp"
#include "glstar/word.hpp"

namespace glstar {

using Sort = std::size_t;

struct SortedLetter {
  std::string name;
  Sort from = 0;
  Sort to = 0;
  friend bool operator==(const SortedLetter&, const SortedLetter&) = default;
};

/// An element x of the input object, living in sort `sort`.
struct Generator {
  std::string name;
  Sort sort = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Sorts, sort-typed letters (Σ_{s,t} stored sparsely as a flat list) and
/// the generators of the input object.
class SortedAlphabet {
 public:
  SortedAlphabet() = default;

  SortedAlphabet(std::vector<std::string> sorts, std::vector<SortedLetter> letters, std::vector<Generator> generators)
      : sorts_(std::move(sorts)), letters_(std::move(letters)), generators_(std::move(generators)) {
    if (sorts_.empty()) throw InvalidInput("sorted alphabet needs at least one sort");
    std::map<std::string, int> seen;
    for (const auto& s : sorts_)
      if (!seen.emplace(s, 0).second) throw InvalidInput("duplicate sort '" + s + "'");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      const auto& l = letters_[i];
      if (l.from >= sorts_.size() || l.to >= sorts_.size()) throw InvalidInput("letter '" + l.name + "' has unknown sort");
      if (!letter_index_.emplace(l.name, i).second) throw InvalidInput("duplicate letter '" + l.name + "'");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i];
      if (g.sort >= sorts_.size()) throw InvalidInput("generator '" + g.name + "' has unknown sort");
      if (!generator_index_.emplace(g.name, i).second) throw InvalidInput("duplicate generator '" + g.name + "'");
    }
    if (generators_.empty()) throw InvalidInput("sorted alphabet needs at least one generator");
    from_.assign(sorts_.size(), {});
    for (Letter a = 0; a < letters_.size(); ++a) from_[letters_[a].from].push_back(a);
  }

  std::size_t sort_count() const { return sorts_.size(); }
  const std::vector<std::string>& sorts() const { return sorts_; }
  const std::string& sort_name(Sort s) const { return sorts_.at(s); }
  Sort sort_index(const std::string& name) const {
    auto it = std::find(sorts_.begin(), sorts_.end(), name);
    if (it == sorts_.end()) throw InvalidInput("unknown sort '" + name + "'");
    return static_cast<Sort>(it - sorts_.begin());
  }

  std::size_t letter_count() const { return letters_.size(); }
  const std::vector<SortedLetter>& letters() const { return letters_; }
  const SortedLetter& letter(Letter a) const { return letters_.at(a); }
  Letter letter_index(const std::string& name) const {
    auto it = letter_index_.find(name);
    if (it == letter_index_.end()) throw InvalidInput("unknown letter '" + name + "'");
    return it->second;
  }
  bool has_letter(const std::string& name) const { return letter_index_.count(name) > 0; }

  /// Letters whose domain sort is s, in alphabet order.
  const std::vector<Letter>& letters_from(Sort s) const { return from_.at(s); }

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(std::size_t g) const { return generators_.at(g); }
  std::size_t generator_index(const std::string& name) const {
    auto it = generator_index_.find(name);
    if (it == generator_index_.end()) throw InvalidInput("unknown generator '" + name + "'");
    return it->second;
  }

  /// Sort reached from `start` by reading `w`; throws on a sort mismatch.
  Sort end_sort(Sort start, std::span<const Letter> w) const {
    Sort s = start;
    for (Letter a : w) {
      if (a >= letters_.size()) throw InvalidInput("unknown letter index " + std::to_string(a));
      if (letters_[a].from != s)
        throw InvalidInput("sort mismatch: letter '" + letters_[a].name + "' expects sort '" +
                           sorts_[letters_[a].from] + "' but word is at sort '" + sorts_[s] + "'");
      s = letters_[a].to;
    }
    return s;
  }

  bool composable(Sort start, std::span<const Letter> w) const {
    Sort s = start;
    for (Letter a : w) {
      if (a >= letters_.size() || letters_[a].from != s) return false;
      s = letters_[a].to;
    }
    return true;
  }

  friend bool operator==(const SortedAlphabet& a, const SortedAlphabet& b) {
    return a.sorts_ == b.sorts_ && a.letters_ == b.letters_ && a.generators_ == b.generators_;
  }

 private:
  std::vector<std::string> sorts_;
  std::vector<SortedLetter> letters_;
  std::vector<Generator> generators_;
  std::map<std::string, Letter> letter_index_;
  std::map<std::string, std::size_t> generator_index_;
  std::vector<std::vector<Letter>> from_;
};

/// x a_1 ... a_n: a generator followed by a composable letter sequence.
struct SortedWord {
  std::size_t generator = 0;
  Word letters;

  friend bool operator==(const SortedWord&, const SortedWord&) = default;
  /// Shortlex: length, then generator, then letters.
  friend std::strong_ordering operator<=>(const SortedWord& a, const SortedWord& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    if (auto c = a.generator <=> b.generator; c != 0) return c;
    return a.letters <=> b.letters;
  }
};

/// A composable letter sequence read from sort `start`; empty allowed.
struct SortedExperiment {
  Sort start = 0;
  Word letters;

  friend bool operator==(const SortedExperiment&, const SortedExperiment&) = default;
  friend std::strong_ordering operator<=>(const SortedExperiment& a, const SortedExperiment& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    if (auto c = a.start <=> b.start; c != 0) return c;
    return a.letters <=> b.letters;
  }
};

inline Sort end_sort(const SortedAlphabet& sigma, const SortedWord& w) {
  if (w.generator >= sigma.generator_count()) throw InvalidInput("unknown generator index");
  return sigma.end_sort(sigma.generator(w.generator).sort, w.letters);
}

inline std::string format_sorted_word(const SortedAlphabet& sigma, const SortedWord& w) {
  std::string out = sigma.generator(w.generator).name;
  for (Letter a : w.letters) out += " " + sigma.letter(a).name;
  return out;
}

/// Sorted Σ-automaton: per-sort states, per-letter transition maps from the
/// states of the letter's domain sort to those of its codomain sort,
/// generator-indexed initial states and per-sort Boolean outputs.
class SortedMachine {
 public:
  SortedMachine() = default;

  SortedMachine(SortedAlphabet alphabet, std::vector<std::size_t> state_counts, std::vector<State> initial,
                std::vector<std::vector<State>> transitions, std::vector<std::vector<bool>> output)
      : alphabet_(std::move(alphabet)),
        counts_(std::move(state_counts)),
        initial_(std::move(initial)),
        delta_(std::move(transitions)),
        output_(std::move(output)) {
    const auto& sigma = alphabet_;
    if (counts_.size() != sigma.sort_count()) throw InvalidInput("state counts must be given per sort");
    if (output_.size() != sigma.sort_count()) throw InvalidInput("outputs must be given per sort");
    for (Sort s = 0; s < counts_.size(); ++s)
      if (output_[s].size() != counts_[s]) throw InvalidInput("output map not total on sort '" + sigma.sort_name(s) + "'");
    if (initial_.size() != sigma.generator_count()) throw InvalidInput("initial assignment must cover every generator");
    for (std::size_t g = 0; g < initial_.size(); ++g)
      if (initial_[g] >= counts_[sigma.generator(g).sort])
        throw InvalidInput("initial state of generator '" + sigma.generator(g).name + "' out of range");
    if (delta_.size() != sigma.letter_count()) throw InvalidInput("transitions must be given per letter");
    for (Letter a = 0; a < delta_.size(); ++a) {
      const auto& l = sigma.letter(a);
      if (delta_[a].size() != counts_[l.from]) throw InvalidInput("transition of '" + l.name + "' not total");
      for (State q : delta_[a])
        if (q >= counts_[l.to]) throw InvalidInput("transition of '" + l.name + "' leaves its target sort");
    }
  }

  const SortedAlphabet& alphabet() const { return alphabet_; }
  std::size_t states(Sort s) const { return counts_.at(s); }
  const std::vector<std::size_t>& state_counts() const { return counts_; }
  std::size_t total_states() const {
    std::size_t n = 0;
    for (auto c : counts_) n += c;
    return n;
  }
  State initial(std::size_t generator) const { return initial_.at(generator); }
  const std::vector<State>& initial_assignment() const { return initial_; }
  State next(Letter a, State q) const { return delta_[a][q]; }
  const std::vector<std::vector<State>>& transitions() const { return delta_; }
  bool output(Sort s, State q) const { return output_[s][q]; }
  const std::vector<std::vector<bool>>& outputs() const { return output_; }

  /// (end sort, end state) after reading w.
  std::pair<Sort, State> reach(const SortedWord& w) const {
    if (w.generator >= alphabet_.generator_count()) throw InvalidInput("unknown generator index");
    Sort s = alphabet_.generator(w.generator).sort;
    State q = initial_[w.generator];
    for (Letter a : w.letters) {
      if (a >= alphabet_.letter_count()) throw InvalidInput("unknown letter index " + std::to_string(a));
      const auto& l = alphabet_.letter(a);
      if (l.from != s)
        throw InvalidInput("sort mismatch: letter '" + l.name + "' cannot be read at sort '" + alphabet_.sort_name(s) + "'");
      q = delta_[a][q];
      s = l.to;
    }
    return {s, q};
  }

  friend bool operator==(const SortedMachine&, const SortedMachine&) = default;

 private:
  SortedAlphabet alphabet_;
  std::vector<std::size_t> counts_;
  std::vector<State> initial_;
  std::vector<std::vector<State>> delta_;
  std::vector<std::vector<bool>> output_;
};

struct SortedRun {
  Sort sort;
  bool output;
};

inline SortedRun run_sorted(const SortedMachine& m, const SortedWord& w) {
  auto [s, q] = m.reach(w);
  return {s, m.output(s, q)};
}

namespace detail {

// States as (sort, index) pairs flattened with per-sort offsets.
struct SortedIndex {
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  explicit SortedIndex(const std::vector<std::size_t>& counts) {
    for (auto c : counts) {
      offset.push_back(total);
      total += c;
    }
  }
  std::size_t flat(Sort s, State q) const { return offset[s] + q; }
};

// Reachable states per sort in BFS order from the generators.
inline std::vector<std::vector<State>> sorted_bfs_order(const SortedMachine& m) {
  const auto& sigma = m.alphabet();
  SortedIndex idx(m.state_counts());
  std::vector<bool> seen(idx.total, false);
  std::vector<std::vector<State>> order(sigma.sort_count());
  std::vector<std::pair<Sort, State>> queue;
  auto visit = [&](Sort s, State q) {
    if (seen[idx.flat(s, q)]) return;
    seen[idx.flat(s, q)] = true;
    order[s].push_back(q);
    queue.emplace_back(s, q);
  };
  for (std::size_t g = 0; g < sigma.generator_count(); ++g) visit(sigma.generator(g).sort, m.initial(g));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [s, q] = queue[i];
    for (Letter a : sigma.letters_from(s)) visit(sigma.letter(a).to, m.next(a, q));
  }
  return order;
}

inline SortedMachine renumber(const SortedMachine& m, const std::vector<std::vector<State>>& order) {
  const auto& sigma = m.alphabet();
  std::vector<std::vector<State>> index(sigma.sort_count());
  for (Sort s = 0; s < sigma.sort_count(); ++s) {
    index[s].assign(m.states(s), m.states(s));
    for (std::size_t i = 0; i < order[s].size(); ++i) index[s][order[s][i]] = i;
  }
  std::vector<std::size_t> counts;
  std::vector<std::vector<bool>> out(sigma.sort_count());
  for (Sort s = 0; s < sigma.sort_count(); ++s) {
    counts.push_back(order[s].size());
    for (State q : order[s]) out[s].push_back(m.output(s, q));
  }
  std::vector<State> init;
  for (std::size_t g = 0; g < sigma.generator_count(); ++g) init.push_back(index[sigma.generator(g).sort][m.initial(g)]);
  std::vector<std::vector<State>> delta(sigma.letter_count());
  for (Letter a = 0; a < sigma.letter_count(); ++a) {
    const auto& l = sigma.letter(a);
    for (State q : order[l.from]) delta[a].push_back(index[l.to][m.next(a, q)]);
  }
  return SortedMachine(sigma, std::move(counts), std::move(init), std::move(delta), std::move(out));
}

// Block id per (sort, state), refined until stable. Blocks never mix sorts.
inline std::vector<std::vector<std::size_t>> sorted_partition(const SortedMachine& m) {
  const auto& sigma = m.alphabet();
  std::vector<std::vector<std::size_t>> block(sigma.sort_count());
  for (Sort s = 0; s < sigma.sort_count(); ++s)
    for (State q = 0; q < m.states(s); ++q) block[s].push_back(2 * s + (m.output(s, q) ? 1 : 0));
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::vector<std::size_t>> next(sigma.sort_count());
    for (Sort s = 0; s < sigma.sort_count(); ++s)
      for (State q = 0; q < m.states(s); ++q) {
        std::vector<std::size_t> sig{s, block[s][q]};
        for (Letter a : sigma.letters_from(s)) sig.push_back(block[sigma.letter(a).to][m.next(a, q)]);
        next[s].push_back(ids.emplace(std::move(sig), ids.size()).first->second);
      }
    if (ids.size() == count) return next;
    count = ids.size();
    block = std::move(next);
  }
}

}  // namespace detail

/// Per-sort BFS renumbering of the reachable part (generators in order,
/// then letters in alphabet order).
inline SortedMachine canonical_form(const SortedMachine& m) {
  return detail::renumber(m, detail::sorted_bfs_order(m));
}

inline SortedMachine minimize_sorted(const SortedMachine& m) {
  SortedMachine r = canonical_form(m);
  const auto& sigma = r.alphabet();
  auto block = detail::sorted_partition(r);
  // Renumber blocks densely per sort, first occurrence order.
  std::vector<std::map<std::size_t, State>> dense(sigma.sort_count());
  std::vector<std::vector<State>> rep(sigma.sort_count());
  for (Sort s = 0; s < sigma.sort_count(); ++s)
    for (State q = 0; q < r.states(s); ++q)
      if (dense[s].emplace(block[s][q], dense[s].size()).second) rep[s].push_back(q);
  auto cls = [&](Sort s, State q) { return dense[s].at(block[s][q]); };
  std::vector<std::size_t> counts;
  std::vector<std::vector<bool>> out(sigma.sort_count());
  for (Sort s = 0; s < sigma.sort_count(); ++s) {
    counts.push_back(rep[s].size());
    for (State q : rep[s]) out[s].push_back(r.output(s, q));
  }
  std::vector<State> init;
  for (std::size_t g = 0; g < sigma.generator_count(); ++g) init.push_back(cls(sigma.generator(g).sort, r.initial(g)));
  std::vector<std::vector<State>> delta(sigma.letter_count());
  for (Letter a = 0; a < sigma.letter_count(); ++a) {
    const auto& l = sigma.letter(a);
    for (State q : rep[l.from]) delta[a].push_back(cls(l.to, r.next(a, q)));
  }
  return canonical_form(SortedMachine(sigma, std::move(counts), std::move(init), std::move(delta), std::move(out)));
}

inline bool isomorphic(const SortedMachine& a, const SortedMachine& b) {
  return a.alphabet() == b.alphabet() && canonical_form(a) == canonical_form(b);
}

inline bool is_minimal(const SortedMachine& m) { return minimize_sorted(m).state_counts() == m.state_counts(); }

/// Shortlex-least (generator, word) on which the two machines' outputs
/// differ, or nothing if they accept the same sorted language.
inline std::optional<SortedWord> sorted_distinguish(const SortedMachine& m1, const SortedMachine& m2) {
  if (!(m1.alphabet() == m2.alphabet())) throw InvalidInput("sorted_distinguish: alphabet mismatch");
  const auto& sigma = m1.alphabet();
  detail::SortedIndex i1(m1.state_counts()), i2(m2.state_counts());
  struct Node {
    Sort sort;
    State p, q;
    std::size_t parent;  // npos for roots
    std::size_t generator;
    Letter via;
  };
  constexpr std::size_t root = static_cast<std::size_t>(-1);
  std::vector<bool> seen(i1.total * i2.total, false);
  std::vector<Node> nodes;
  auto push = [&](Node n) {
    std::size_t key = i1.flat(n.sort, n.p) * i2.total + i2.flat(n.sort, n.q);
    if (seen[key]) return;
    seen[key] = true;
    nodes.push_back(n);
  };
  for (std::size_t g = 0; g < sigma.generator_count(); ++g)
    push({sigma.generator(g).sort, m1.initial(g), m2.initial(g), root, g, 0});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Node n = nodes[i];
    if (m1.output(n.sort, n.p) != m2.output(n.sort, n.q)) {
      Word w;
      std::size_t j = i;
      while (nodes[j].parent != root) {
        w.push_back(nodes[j].via);
        j = nodes[j].parent;
      }
      return SortedWord{nodes[j].generator, Word(w.rbegin(), w.rend())};
    }
    for (Letter a : sigma.letters_from(n.sort))
      push({sigma.letter(a).to, m1.next(a, n.p), m2.next(a, n.q), i, n.generator, a});
  }
  return std::nullopt;
}

/// Up to `per_state` distinct access words per state, shortest ones first.
/// Each state is expanded at most `per_state` times, so this terminates.
/// Result is indexed [sort][state].
inline std::vector<std::vector<std::vector<SortedWord>>> access_words(const SortedMachine& m, std::size_t per_state = 1) {
  const auto& sigma = m.alphabet();
  std::vector<std::vector<std::vector<SortedWord>>> out(sigma.sort_count());
  for (Sort s = 0; s < sigma.sort_count(); ++s) out[s].resize(m.states(s));
  std::vector<std::pair<Sort, SortedWord>> queue;
  for (std::size_t g = 0; g < sigma.generator_count(); ++g) queue.emplace_back(sigma.generator(g).sort, SortedWord{g, {}});
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [s, w] = queue[i];
    State q = m.reach(w).second;
    if (out[s][q].size() >= per_state) continue;
    out[s][q].push_back(w);
    for (Letter a : sigma.letters_from(s)) queue.emplace_back(sigma.letter(a).to, SortedWord{w.generator, append(w.letters, a)});
  }
  return out;
}

/// One-sorted machine over `alphabet` with a single generator named
/// `generator`; observationally the same as the Moore machine m.
inline SortedMachine as_single_sorted(const MooreMachine& m, const std::string& generator = "ε") {
  std::vector<SortedLetter> letters;
  for (const auto& name : m.alphabet().names()) letters.push_back({name, 0, 0});
  SortedAlphabet sigma({"*"}, std::move(letters), {{generator, 0}});
  std::vector<std::vector<State>> delta(m.alphabet().size());
  for (Letter a = 0; a < m.alphabet().size(); ++a)
    for (State q = 0; q < m.size(); ++q) delta[a].push_back(m.next(q, a));
  return SortedMachine(std::move(sigma), {m.size()}, {m.initial()}, std::move(delta), {m.outputs()});
}

}  // namespace glstar
