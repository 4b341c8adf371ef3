#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "atg/automaton.hpp"
#include "atg/model.hpp"
#include "atg/stree.hpp"

namespace atg {

struct SolveOptions {
  std::size_t automaton_state_cap = 1000000;
  /// Alternating search only: test membership as soon as a node is visited
  /// instead of at branch exits. Verdict-neutral.
  bool alg1_early_exit = false;
};

enum class PneMethod {
  BfsProduct,  // breadth-first over system x automaton; shortest witness
  DfsProduct,  // depth-first over the same product; witness may be longer
};

/// Does some valid path (from `from` when given, from anywhere otherwise)
/// belong to the goal's path set? YES comes with a path witness.
QueryResult pne(const TransitionSystem& ts, const AttackTree& goal,
                std::optional<PosId> from = std::nullopt,
                PneMethod method = PneMethod::BfsProduct,
                const SolveOptions& options = {});

/// Winning region of the position x automaton product for sure reachability
/// of accepting product states.
struct AttractorTable {
  struct Entry {
    PosId position;
    int dstate;
    int rank;      // 0 = accepting; rank r+1 has an action into ranks <= r
    ActId choice;  // certificate action, -1 on accepting entries
  };
  std::vector<Entry> winning;
  long long reachable = 0;
  long long rounds = 0;

  const Entry* find(PosId position, int dstate) const;
};

/// Rank-based attractor over the part of the product reachable from the
/// given start pairs (position, automaton state after that position).
AttractorTable solve_attractor(const GameArena& arena,
                               const SemanticsAutomaton& dfa,
                               const std::vector<std::pair<PosId, int>>& starts);

/// Does the Attacker have a winning strategy (a finite well-formed tree with
/// every maximal history in the goal's path set)? Attractor engine; YES
/// comes with a tree witness pruned at acceptance.
QueryResult sne_attractor(const GameArena& arena, const AttackTree& goal,
                          std::optional<PosId> from = std::nullopt,
                          const SolveOptions& options = {});

/// Same question, decided by depth-bounded alternating search: histories
/// grow to |positions| * leaf_count(goal) states, the Attacker existentially
/// picks an action or stops, the Defender universally branches. Polynomial
/// space, worst-case exponential time, no witness.
QueryResult sne_alg1(const GameArena& arena, const AttackTree& goal,
                     std::optional<PosId> from = std::nullopt,
                     const SolveOptions& options = {});

/// Is the explicitly given tree a witness for the goal?
QueryResult sm_explicit(const GameArena& arena, const AttackTree& goal,
                        const STree& tree);

/// Does the positional strategy win from `from`? Decided on the
/// strategy-restricted product: plays stop at accepting product states, and
/// the strategy wins iff no cycle of non-accepting states is reachable.
QueryResult sm_memoryless(const GameArena& arena, const AttackTree& goal,
                          const MemorylessStrategy& strategy, PosId from,
                          const SolveOptions& options = {});

}  // namespace atg
