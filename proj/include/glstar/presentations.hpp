#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/sorted.hpp"
#include "glstar/word.hpp"

namespace glstar {

/// Ultimately periodic word spoke · loop^ω.
struct Lasso {
  Word spoke;
  Word loop;

  friend bool operator==(const Lasso&, const Lasso&) = default;
};

/// First n letters of spoke · loop^ω.
inline Word unroll(const Lasso& l, std::size_t n) {
  if (l.loop.empty()) throw InvalidInput("lasso loop must be non-empty");
  Word out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < l.spoke.size() ? l.spoke[i] : l.loop[(i - l.spoke.size()) % l.loop.size()]);
  return out;
}

/// Whether the two lassos denote the same infinite word.
inline bool lasso_eq(const Lasso& a, const Lasso& b) {
  if (a.loop.empty() || b.loop.empty()) throw InvalidInput("lasso loop must be non-empty");
  std::size_t n = a.spoke.size() + b.spoke.size() + 2 * std::lcm(a.loop.size(), b.loop.size());
  return unroll(a, n) == unroll(b, n);
}

/// Shortest spoke, then shortest primitive loop.
inline Lasso normalize(Lasso l) {
  if (l.loop.empty()) throw InvalidInput("lasso loop must be non-empty");
  const std::size_t n = l.loop.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = l.loop[i] == l.loop[i - p];
    if (periodic) {
      l.loop.resize(p);
      break;
    }
  }
  while (!l.spoke.empty() && l.spoke.back() == l.loop.back()) {
    l.spoke.pop_back();
    std::rotate(l.loop.rbegin(), l.loop.rbegin() + 1, l.loop.rend());
  }
  return l;
}

/// What a letter of a presentation alphabet does to the value built so far.
enum class Op { append, prepend, omega, prepend_spoke };

/// An automata presentation over a base alphabet I: the sorted instruction
/// alphabet, its generators (one per base letter, at sort "+") and the
/// meaning of every instruction letter.
class Presentation {
 public:
  struct Instruction {
    Op op;
    Letter base = 0;
  };

  /// Letters →a (and ←a when `full`), one sort "+".
  static Presentation semigroup(const Alphabet& base, bool full = true) {
    Presentation p;
    p.base_ = base;
    std::vector<SortedLetter> letters;
    for (Letter a = 0; a < base.size(); ++a) {
      letters.push_back({"→" + base.name(a), 0, 0});
      p.ops_.push_back({Op::append, a});
    }
    if (full)
      for (Letter a = 0; a < base.size(); ++a) {
        letters.push_back({"←" + base.name(a), 0, 0});
        p.ops_.push_back({Op::prepend, a});
      }
    p.sigma_ = SortedAlphabet({"+"}, std::move(letters), generators_of(base));
    return p;
  }

  /// Sorts "+" and "ω" with letters →a on +, ω from + to ω, and ←ωa on ω.
  static Presentation wilke(const Alphabet& base) {
    Presentation p;
    p.base_ = base;
    p.wilke_ = true;
    std::vector<SortedLetter> letters;
    for (Letter a = 0; a < base.size(); ++a) {
      letters.push_back({"→" + base.name(a), 0, 0});
      p.ops_.push_back({Op::append, a});
    }
    letters.push_back({"ω", 0, 1});
    p.ops_.push_back({Op::omega, 0});
    for (Letter a = 0; a < base.size(); ++a) {
      letters.push_back({"←ω" + base.name(a), 1, 1});
      p.ops_.push_back({Op::prepend_spoke, a});
    }
    p.sigma_ = SortedAlphabet({"+", "ω"}, std::move(letters), generators_of(base));
    return p;
  }

  const Alphabet& base() const { return base_; }
  const SortedAlphabet& alphabet() const { return sigma_; }
  bool is_wilke() const { return wilke_; }
  bool has_prepend() const {
    for (const auto& i : ops_)
      if (i.op == Op::prepend) return true;
    return false;
  }
  const Instruction& instruction(Letter a) const { return ops_.at(a); }

  Letter letter_for(Op op, Letter base) const {
    for (Letter a = 0; a < ops_.size(); ++a)
      if (ops_[a].op == op && (op == Op::omega || ops_[a].base == base)) return a;
    throw InvalidInput("presentation has no such instruction letter");
  }

  /// Parses instruction words such as "a →b ←a", "a→b→c", "b →a ω ←ω a"
  /// or the ASCII spellings "b ->a omega <-omega a".
  SortedWord parse(std::string_view text) const {
    std::vector<std::string> tokens = tokenize(text);
    if (tokens.empty()) throw InvalidInput("empty instruction word");
    SortedWord w{sigma_.generator_index(tokens[0]), {}};
    for (std::size_t i = 1; i < tokens.size(); ++i) w.letters.push_back(sigma_.letter_index(tokens[i]));
    end_sort(sigma_, w);
    return w;
  }

  std::string format(const SortedWord& w) const { return format_sorted_word(sigma_, w); }

  /// first(u) →u_2 ... →u_n.
  SortedWord from_word(const Word& u) const {
    if (u.empty()) throw InvalidInput("instruction words denote non-empty words");
    SortedWord w{u[0], {}};
    for (std::size_t i = 1; i < u.size(); ++i) w.letters.push_back(letter_for(Op::append, u[i]));
    return w;
  }

  /// The loop as a finite word, then ω, then the spoke prepended letter by
  /// letter from its end.
  SortedWord from_lasso(const Lasso& l) const {
    if (!wilke_) throw InvalidInput("lassos need the Wilke presentation");
    SortedWord w = from_word(l.loop);
    w.letters.push_back(letter_for(Op::omega, 0));
    for (auto it = l.spoke.rbegin(); it != l.spoke.rend(); ++it) w.letters.push_back(letter_for(Op::prepend_spoke, *it));
    return w;
  }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.base_ == b.base_ && a.sigma_ == b.sigma_ && a.wilke_ == b.wilke_;
  }

 private:
  static std::vector<Generator> generators_of(const Alphabet& base) {
    std::vector<Generator> gens;
    for (Letter a = 0; a < base.size(); ++a) gens.push_back({base.name(a), 0});
    return gens;
  }

  std::vector<std::string> tokenize(std::string_view text) const {
    static const std::vector<std::pair<std::string_view, std::string_view>> markers = {
        {"<-omega", "←ω"}, {"←ω", "←ω"}, {"->", "→"}, {"→", "→"}, {"<-", "←"}, {"←", "←"}, {"omega", "ω"}, {"ω", "ω"}};
    std::vector<std::string> out;
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    };
    auto marker_at = [&](std::size_t pos) -> std::optional<std::pair<std::string_view, std::string_view>> {
      for (const auto& m : markers)
        if (text.substr(pos, m.first.size()) == m.first) return m;
      return std::nullopt;
    };
    auto read_name = [&] {
      std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' && text[i] != '\r' &&
             !(i > start && marker_at(i)))
        ++i;
      return std::string(text.substr(start, i - start));
    };
    while (true) {
      skip_space();
      if (i >= text.size()) break;
      auto m = marker_at(i);
      if (m && !(m->first == "omega" && base_.contains("omega"))) {
        i += m->first.size();
        if (m->second == "ω") {
          out.emplace_back("ω");
          continue;
        }
        skip_space();
        if (i >= text.size()) throw InvalidInput("instruction '" + std::string(m->second) + "' lacks its letter");
        out.push_back(std::string(m->second) + read_name());
        continue;
      }
      out.push_back(read_name());
    }
    return out;
  }

  Alphabet base_;
  SortedAlphabet sigma_;
  std::vector<Instruction> ops_;
  bool wilke_ = false;
};

/// Value of an instruction word in the free algebra over the base letters.
using Interpretation = std::variant<Word, Lasso>;

inline Interpretation interpret(const Presentation& p, const SortedWord& w) {
  end_sort(p.alphabet(), w);
  Word u{w.generator};
  std::optional<Lasso> lasso;
  for (Letter a : w.letters) {
    const auto& ins = p.instruction(a);
    switch (ins.op) {
      case Op::append:
        u.push_back(ins.base);
        break;
      case Op::prepend:
        u.insert(u.begin(), ins.base);
        break;
      case Op::omega:
        lasso = Lasso{{}, u};
        break;
      case Op::prepend_spoke:
        lasso->spoke.insert(lasso->spoke.begin(), ins.base);
        break;
    }
  }
  if (lasso) return *lasso;
  return u;
}

/// The finite word denoted by a semigroup instruction word.
inline Word interpret_semigroup_word(const Presentation& p, const SortedWord& w) {
  auto v = interpret(p, w);
  if (!std::holds_alternative<Word>(v)) throw InvalidInput("instruction word denotes an infinite word");
  return std::get<Word>(v);
}

inline Word interpret_semigroup_word(const Presentation& p, std::string_view text) {
  return interpret_semigroup_word(p, p.parse(text));
}

inline Interpretation interpret_wilke_word(const Presentation& p, const SortedWord& w) {
  if (!p.is_wilke()) throw InvalidInput("not a Wilke presentation");
  return interpret(p, w);
}

inline Interpretation interpret_wilke_word(const Presentation& p, std::string_view text) {
  return interpret_wilke_word(p, p.parse(text));
}

using WordPredicate = std::function<bool(const Word&)>;
using LassoPredicate = std::function<bool(const Lasso&)>;

/// Membership of instruction words: the language applied to their
/// interpretation.
inline std::function<bool(const SortedWord&)> linearize_membership(Presentation p, WordPredicate finite) {
  return [p = std::move(p), finite = std::move(finite)](const SortedWord& w) {
    return finite(interpret_semigroup_word(p, w));
  };
}

/// As above for two-sorted languages: ω-sort words ask `infinite` about
/// their lasso, +-sort words ask `finite` (false when absent).
inline std::function<bool(const SortedWord&)> linearize_membership(Presentation p, WordPredicate finite,
                                                                   LassoPredicate infinite) {
  return [p = std::move(p), finite = std::move(finite), infinite = std::move(infinite)](const SortedWord& w) {
    auto v = interpret(p, w);
    if (auto* l = std::get_if<Lasso>(&v)) return infinite(*l);
    return finite ? finite(std::get<Word>(v)) : false;
  };
}

}  // namespace glstar
