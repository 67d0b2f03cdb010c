#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "glstar/glstar.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Graph graph_of(const glstar::MooreMachine& m) {
  oracle::Graph g;
  g.initial = m.initial();
  g.next.resize(m.size());
  for (glstar::State q = 0; q < m.size(); ++q) {
    g.output.push_back(m.output(q));
    for (glstar::Letter a = 0; a < m.alphabet().size(); ++a) g.next[q].push_back(m.next(q, a));
  }
  return g;
}

inline oracle::WordFn language_of(const glstar::MooreMachine& m) {
  return [m](const glstar::Word& w) { return glstar::run_moore(m, w); };
}

/// The seeded corpus of random minimal DFAs over {a, b}.
inline std::vector<glstar::MooreMachine> random_corpus(std::size_t count = 50, std::size_t max_states = 12,
                                                       std::uint64_t seed = 20240501) {
  std::mt19937_64 rng(seed);
  std::vector<glstar::MooreMachine> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(glstar::random_minimal_dfa(rng, max_states, glstar::ab_alphabet()));
  return out;
}

inline std::vector<std::pair<std::string, glstar::MooreMachine>> boolean_builtins() {
  std::vector<std::pair<std::string, glstar::MooreMachine>> out;
  for (const auto& t : glstar::builtin_targets())
    if (t.dfa) out.emplace_back(t.name, *t.dfa);
  return out;
}

}  // namespace testing_support
