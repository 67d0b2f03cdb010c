// Compares residual automata with minimal DFAs for "the n-th letter from
// the end is an a".

#include <iostream>

#include "glstar/glstar.hpp"

using namespace glstar;

int main() {
  std::cout << "n  dfa  rfsa\n";
  for (std::size_t n = 1; n <= 5; ++n) {
    MooreMachine target = suffix_a_dfa(n);
    DfaTeacher teacher(target);
    auto r = learn(JslDomain(ab_alphabet()), teacher);
    std::cout << n << "  " << minimize_moore(target).size() << "  " << r.hypothesis.rfsa.states << "\n";
  }
}
