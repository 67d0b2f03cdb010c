// Learns the Wilke algebra of "infinitely many a" from lasso queries.

#include <iostream>

#include "glstar/glstar.hpp"

using namespace glstar;

int main() {
  LassoOracleTarget t = inf_a_target();
  auto teacher = wilke_teacher(t);
  auto r = learn(SortedDomain(t.presentation.alphabet()), teacher);
  WilkeAlgebra alg = extract_wilke_algebra(t.presentation, r.hypothesis);
  const Alphabet& base = t.presentation.base();
  std::cout << alg.plus << " finite classes, " << alg.omega << " infinite classes\n";
  for (std::size_t s = 0; s < alg.plus; ++s)
    std::cout << "  [" << base.format(alg.plus_witness[s]) << "]^ω = omega class " << alg.omega_power[s] << "\n";
  for (std::size_t z = 0; z < alg.omega; ++z)
    std::cout << "  omega class " << z << " (" << base.format(alg.omega_witness[z].spoke) << "("
              << base.format(alg.omega_witness[z].loop) << ")^ω) " << (alg.accepting[z] ? "accepted" : "rejected")
              << "\n";
}
