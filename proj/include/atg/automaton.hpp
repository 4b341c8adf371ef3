#pragma once

#include <cstddef>
#include <vector>

#include "atg/model.hpp"
#include "atg/path_semantics.hpp"

namespace atg {

/// Explicit deterministic automaton over the state alphabet of a transition
/// system. Contract: for every valid path w of the system it was built for,
/// accepts(w) == pm_check(w). Words that are not valid paths carry no
/// meaning.
struct SemanticsAutomaton {
  int alphabet_size = 0;
  int initial = 0;
  std::vector<int> step_table;  // [state * alphabet_size + letter]
  std::vector<bool> accepting;

  int num_states() const { return static_cast<int>(accepting.size()); }

  int step(int state, PosId letter) const {
    return step_table[static_cast<size_t>(state) * alphabet_size + letter];
  }

  /// State after reading word from the initial state.
  int run(const std::vector<PosId>& word) const;

  bool accepts(const std::vector<PosId>& word) const;
  bool accepts(const Path& path) const { return accepts(path.states); }
};

struct AutomatonOptions {
  /// Total number of states materialized across all intermediate layers of
  /// one build; CapacityError beyond.
  std::size_t state_cap = 1000000;
};

/// Bottom-up construction: one automaton layer per tree node, each
/// materialized lazily from its reachable part. No minimization.
SemanticsAutomaton build_automaton(const TransitionSystem& ts,
                                   const AttackTree& tree,
                                   const AutomatonOptions& options = {});

/// Check the contract on every valid path with at most max_len states. On
/// failure, the first offending path is stored in *counterexample when given.
bool bounded_equiv(const SemanticsAutomaton& dfa, const TransitionSystem& ts,
                   const AttackTree& tree, int max_len,
                   Path* counterexample = nullptr);

}  // namespace atg
