#pragma once

#include <string>
#include <vector>

#include "glstar/sorted.hpp"
#include "glstar/word.hpp"

namespace glstar {

/// Word plumbing shared by the one-sorted domains: S and T are sets of
/// plain words over a single alphabet, initialized to {ε}.
class WordDomainBase {
 public:
  using Prefix = Word;
  using Suffix = Word;
  using Query = Word;

  WordDomainBase() = default;
  explicit WordDomainBase(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
    for (Letter a = 0; a < alphabet_.size(); ++a) letters_.push_back(a);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }

  std::vector<Prefix> initial_prefixes() const { return {Word{}}; }
  std::vector<Suffix> initial_suffixes() const { return {Word{}}; }

  const std::vector<Letter>& letters_after(const Prefix&) const { return letters_; }
  const std::vector<Letter>& letters_before(const Suffix&) const { return letters_; }
  Prefix extend_prefix(const Prefix& p, Letter a) const { return append(p, a); }
  Suffix extend_suffix(Letter a, const Suffix& t) const { return prepend(a, t); }
  bool compatible(const Prefix&, const Suffix&) const { return true; }
  Query concat(const Prefix& p, const Suffix& t) const { return glstar::concat(p, t); }
  Sort sort_of(const Prefix&) const { return 0; }
  Sort suffix_sort(const Suffix&) const { return 0; }
  bool is_empty_suffix(const Suffix& t) const { return t.empty(); }

  /// ε, w_1, w_1 w_2, ..., w.
  std::vector<Prefix> prefixes_of(const Query& w) const {
    std::vector<Prefix> out;
    for (std::size_t k = 0; k <= w.size(); ++k) out.emplace_back(w.begin(), w.begin() + static_cast<long>(k));
    return out;
  }

  /// w, w_2...w_n, ..., ε.
  std::vector<Suffix> suffixes_of(const Query& w) const {
    std::vector<Suffix> out;
    for (std::size_t k = 0; k <= w.size(); ++k) out.emplace_back(w.begin() + static_cast<long>(k), w.end());
    return out;
  }

  void validate(const Query& w) const { alphabet_.check(w); }

  std::string format_prefix(const Prefix& p) const { return alphabet_.format(p); }
  std::string format_suffix(const Suffix& t) const { return alphabet_.format(t); }
  std::string format_query(const Query& q) const { return alphabet_.format(q); }

 protected:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

}  // namespace glstar
