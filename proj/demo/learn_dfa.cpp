// Learns the mod-k counters and prints the query counts of each run.

#include <iostream>

#include "glstar/glstar.hpp"

using namespace glstar;

int main() {
  for (std::size_t k = 1; k <= 6; ++k) {
    MooreMachine target = mod_counter_dfa(k);
    DfaTeacher teacher(target);
    Learner<BoolDomain> learner(BoolDomain(target.alphabet()), teacher);
    learner.on_hypothesis([](const ObservationTable<BoolDomain>&, const MooreMachine& h) {
      std::cout << "  hypothesis with " << h.size() << " states\n";
    });
    auto r = learner.run();
    std::cout << "mod-" << k << ": " << r.hypothesis.size() << " states, " << r.stats.membership_queries
              << " membership and " << r.stats.equivalence_queries << " equivalence queries\n";
  }
  std::cout << "\nfinal table for mod-2:\n";
  DfaTeacher teacher(mod_counter_dfa(2));
  std::cout << learn(BoolDomain(ab_alphabet()), teacher).table.dump();
}
