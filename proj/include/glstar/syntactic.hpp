#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "glstar/errors.hpp"
#include "glstar/presentations.hpp"
#include "glstar/sorted.hpp"

namespace glstar {

/// Finite semigroup on 0..size-1. Element i is state i of the automaton it
/// was extracted from; `witness[i]` is a word in I^+ mapped to it.
struct FiniteSemigroup {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> mult;
  std::vector<bool> accepting;
  std::vector<Word> witness;

  std::size_t operator()(std::size_t x, std::size_t y) const { return mult[x][y]; }
  friend bool operator==(const FiniteSemigroup&, const FiniteSemigroup&) = default;
};

/// First violation of (xy)z = x(yz), if any.
inline std::optional<std::array<std::size_t, 3>> associativity_violation(const FiniteSemigroup& s) {
  for (std::size_t x = 0; x < s.size; ++x)
    for (std::size_t y = 0; y < s.size; ++y)
      for (std::size_t z = 0; z < s.size; ++z)
        if (s(s(x, y), z) != s(x, s(y, z))) return std::array<std::size_t, 3>{x, y, z};
  return std::nullopt;
}

/// Two-sorted algebra with finite product, mixed product and ω-power.
struct WilkeAlgebra {
  std::size_t plus = 0;
  std::size_t omega = 0;
  std::vector<std::vector<std::size_t>> product;  // plus × plus → plus
  std::vector<std::vector<std::size_t>> mixed;    // plus × omega → omega
  std::vector<std::size_t> omega_power;           // plus → omega
  std::vector<bool> accepting;                    // per omega element
  std::vector<Word> plus_witness;
  std::vector<Lasso> omega_witness;

  friend bool operator==(const WilkeAlgebra&, const WilkeAlgebra&) = default;
};

/// Description of the first violated Wilke law, or empty. Powers are
/// checked up to `max_power`.
inline std::string wilke_law_violation(const WilkeAlgebra& w, std::size_t max_power = 4) {
  auto mul = [&](std::size_t s, std::size_t t) { return w.product[s][t]; };
  auto name = [](const char* law, std::initializer_list<std::size_t> xs) {
    std::string out = law;
    for (auto x : xs) out += " " + std::to_string(x);
    return out;
  };
  for (std::size_t s = 0; s < w.plus; ++s)
    for (std::size_t t = 0; t < w.plus; ++t) {
      for (std::size_t u = 0; u < w.plus; ++u)
        if (mul(mul(s, t), u) != mul(s, mul(t, u))) return name("(st)u = s(tu) fails at", {s, t, u});
      for (std::size_t z = 0; z < w.omega; ++z)
        if (w.mixed[mul(s, t)][z] != w.mixed[s][w.mixed[t][z]]) return name("(st)z = s(tz) fails at", {s, t, z});
      if (w.mixed[s][w.omega_power[mul(t, s)]] != w.omega_power[mul(s, t)])
        return name("s(ts)^ω = (st)^ω fails at", {s, t});
    }
  for (std::size_t s = 0; s < w.plus; ++s) {
    std::size_t p = s;
    for (std::size_t n = 2; n <= max_power; ++n) {
      p = mul(p, s);
      if (w.omega_power[p] != w.omega_power[s]) return name("(s^n)^ω = s^ω fails at", {s, n});
    }
  }
  return {};
}

namespace detail {

inline void require_minimal(const SortedMachine& q) {
  if (!is_minimal(q)) throw ExtractionError("extraction needs a minimal automaton");
}

}  // namespace detail

/// The syntactic semigroup read off the minimal automaton of the
/// linearized language over the full semigroup presentation. The product of
/// the classes of u1 and u2 is the state reached by u1 u2; every entry is
/// recomputed from up to `alternatives` access words per state.
inline FiniteSemigroup extract_syntactic_semigroup(const Presentation& p, const SortedMachine& q,
                                                   std::size_t alternatives = 3) {
  if (p.is_wilke() || !p.has_prepend()) throw ExtractionError("extraction needs the full semigroup presentation");
  if (!(q.alphabet() == p.alphabet())) throw ExtractionError("automaton is not over the presentation alphabet");
  detail::require_minimal(q);
  const std::size_t n = q.states(0);
  auto access = access_words(q, alternatives);
  std::vector<std::vector<Word>> words(n);
  for (State x = 0; x < n; ++x)
    for (const auto& w : access[0][x]) words[x].push_back(interpret_semigroup_word(p, w));

  for (State x = 0; x < n; ++x)
    for (const auto& u : words[x])
      if (q.reach(p.from_word(u)).second != x)
        throw ExtractionError("state " + std::to_string(x) + " is reached by instruction words for '" +
                              p.base().format(u) + "' and by other words denoting it");

  FiniteSemigroup s;
  s.size = n;
  s.mult.assign(n, std::vector<std::size_t>(n));
  for (State x = 0; x < n; ++x) {
    s.accepting.push_back(q.output(0, x));
    s.witness.push_back(words[x].front());
  }
  auto product_state = [&](const Word& u1, const Word& u2) { return q.reach(p.from_word(concat(u1, u2))).second; };
  for (State x = 0; x < n; ++x)
    for (State y = 0; y < n; ++y) {
      State z = product_state(words[x].front(), words[y].front());
      for (const auto& u1 : words[x])
        for (const auto& u2 : words[y])
          if (product_state(u1, u2) != z)
            throw ExtractionError("product of " + std::to_string(x) + " and " + std::to_string(y) +
                                  " depends on the chosen words ('" + p.base().format(u1) + "', '" +
                                  p.base().format(u2) + "')");
      s.mult[x][y] = z;
    }
  if (auto v = associativity_violation(s))
    throw ExtractionError("product is not associative at (" + std::to_string((*v)[0]) + ", " +
                          std::to_string((*v)[1]) + ", " + std::to_string((*v)[2]) + ")");
  return s;
}

/// The Wilke algebra read off the minimal automaton of the linearized
/// lasso language over the weak Wilke presentation. Well-definedness is
/// checked against alternative access words and the laws are checked up
/// to the fourth power.
inline WilkeAlgebra extract_wilke_algebra(const Presentation& p, const SortedMachine& q, std::size_t alternatives = 3) {
  if (!p.is_wilke()) throw ExtractionError("extraction needs the Wilke presentation");
  if (!(q.alphabet() == p.alphabet())) throw ExtractionError("automaton is not over the presentation alphabet");
  detail::require_minimal(q);
  const std::size_t np = q.states(0), no = q.states(1);
  auto access = access_words(q, alternatives);
  std::vector<std::vector<Word>> plus(np);
  std::vector<std::vector<Lasso>> omega(no);
  for (State x = 0; x < np; ++x)
    for (const auto& w : access[0][x]) plus[x].push_back(std::get<Word>(interpret(p, w)));
  for (State z = 0; z < no; ++z)
    for (const auto& w : access[1][z]) omega[z].push_back(std::get<Lasso>(interpret(p, w)));

  auto state_of_word = [&](const Word& u) { return q.reach(p.from_word(u)).second; };
  auto state_of_lasso = [&](const Lasso& l) { return q.reach(p.from_lasso(l)).second; };
  auto fail = [](const std::string& what, std::size_t x, std::size_t y) {
    throw ExtractionError(what + " of " + std::to_string(x) + " and " + std::to_string(y) +
                          " depends on the chosen access words");
  };

  for (State x = 0; x < np; ++x)
    for (const auto& u : plus[x])
      if (state_of_word(u) != x) fail("class", x, x);
  for (State z = 0; z < no; ++z)
    for (const auto& l : omega[z])
      if (state_of_lasso(l) != z) fail("class", z, z);

  WilkeAlgebra w;
  w.plus = np;
  w.omega = no;
  for (State x = 0; x < np; ++x) w.plus_witness.push_back(plus[x].front());
  for (State z = 0; z < no; ++z) {
    w.omega_witness.push_back(omega[z].front());
    w.accepting.push_back(q.output(1, z));
  }
  w.product.assign(np, std::vector<std::size_t>(np));
  for (State x = 0; x < np; ++x)
    for (State y = 0; y < np; ++y) {
      State r = state_of_word(concat(plus[x].front(), plus[y].front()));
      for (const auto& u1 : plus[x])
        for (const auto& u2 : plus[y])
          if (state_of_word(concat(u1, u2)) != r) fail("product", x, y);
      w.product[x][y] = r;
    }
  w.mixed.assign(np, std::vector<std::size_t>(no));
  for (State x = 0; x < np; ++x)
    for (State z = 0; z < no; ++z) {
      auto mix = [&](const Word& u, const Lasso& l) { return state_of_lasso(Lasso{concat(u, l.spoke), l.loop}); };
      State r = mix(plus[x].front(), omega[z].front());
      for (const auto& u : plus[x])
        for (const auto& l : omega[z])
          if (mix(u, l) != r) fail("mixed product", x, z);
      w.mixed[x][z] = r;
    }
  for (State x = 0; x < np; ++x) {
    State r = state_of_lasso(Lasso{{}, plus[x].front()});
    for (const auto& u : plus[x])
      if (state_of_lasso(Lasso{{}, u}) != r) fail("omega power", x, x);
    w.omega_power.push_back(r);
  }
  if (auto v = wilke_law_violation(w); !v.empty()) throw ExtractionError("Wilke law violated: " + v);
  return w;
}

}  // namespace glstar
