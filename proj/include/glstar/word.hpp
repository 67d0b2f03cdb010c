#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glstar/errors.hpp"

namespace glstar {

using Letter = std::size_t;
using Word = std::vector<Letter>;

/// Length first, then lexicographic by letter index.
inline bool shortlex_less(std::span<const Letter> lhs, std::span<const Letter> rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

inline Word concat(const Word& lhs, const Word& rhs) {
  Word out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

inline Word append(Word w, Letter a) {
  w.push_back(a);
  return w;
}

inline Word prepend(Letter a, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(a);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

/// Finite, ordered, duplicate-free set of letter names. Letter i is names()[i].
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidInput("alphabet must be non-empty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InvalidInput("alphabet letters must be non-empty strings");
      if (!index_.emplace(names_[i], i).second)
        throw InvalidInput("duplicate letter '" + names_[i] + "' in alphabet");
    }
  }

  /// One letter per character, e.g. from_chars("ab").
  static Alphabet from_chars(std::string_view chars) {
    std::vector<std::string> names;
    for (char c : chars) names.emplace_back(1, c);
    return Alphabet(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Letter a) const { return names_.at(a); }

  Letter index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw InvalidInput("unknown letter '" + std::string(name) + "'");
    return it->second;
  }

  bool contains(std::string_view name) const { return index_.count(std::string(name)) > 0; }

  bool single_char() const {
    return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
  }

  /// Parses a word. Whitespace-separated tokens when the text contains
  /// whitespace or some letter name is longer than one character; otherwise
  /// one letter per character. "ε" and the empty string denote the empty word.
  Word parse(std::string_view text) const {
    Word w;
    if (text.empty() || text == "ε") return w;
    bool tokenized = !single_char() || text.find_first_of(" \t") != std::string_view::npos;
    if (!tokenized) {
      for (char c : text) w.push_back(index(std::string_view(&c, 1)));
      return w;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
      std::size_t end = pos;
      while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
      if (end > pos) w.push_back(index(text.substr(pos, end - pos)));
      pos = end;
    }
    return w;
  }

  std::string format(std::span<const Letter> w) const {
    if (w.empty()) return "ε";
    std::string out;
    bool spaced = !single_char();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (spaced && i > 0) out += ' ';
      out += name(w[i]);
    }
    return out;
  }

  void check(std::span<const Letter> w) const {
    for (Letter a : w)
      if (a >= names_.size()) throw InvalidInput("letter index " + std::to_string(a) + " outside alphabet");
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Letter, std::less<>> index_;
};

/// All words over k letters of exactly the given length, in lexicographic order.
inline std::vector<Word> words_of_length(std::size_t k, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * k);
    for (const Word& w : out)
      for (Letter a = 0; a < k; ++a) next.push_back(append(w, a));
    out = std::move(next);
  }
  return out;
}

/// All words of length <= max_length in shortlex order.
inline std::vector<Word> words_up_to(std::size_t k, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    auto layer = words_of_length(k, len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace glstar
