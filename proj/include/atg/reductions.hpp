#pragma once

#include <string>
#include <vector>

#include "atg/model.hpp"

namespace atg {

enum class Quant { Exists, ForAll };

/// Prenex CNF instance. Variables are 1-based; prefix lists each quantified
/// variable once, outermost first. Clause literals are signed variable ids.
struct QbfInstance {
  std::vector<std::pair<Quant, int>> prefix;
  std::vector<std::vector<int>> clauses;

  int num_vars() const { return static_cast<int>(prefix.size()); }
  void check() const;  // throws ModelError
};

/// QDIMACS-style input: optional `p cnf <vars> <clauses>` header, `c`
/// comment lines, `e`/`a` quantifier lines and clause lines, all
/// 0-terminated. Unquantified variables become outermost existentials.
QbfInstance parse_qdimacs(const std::string& text);
std::string print_qdimacs(const QbfInstance& q);

/// Truth value by exhaustive expansion of the prefix. Instances with more
/// than max_vars variables raise CapacityError.
bool qbf_eval(const QbfInstance& q, int max_vars = 20);

/// Game encoding of a QBF: a chain of variable positions (one Boolean choice
/// per level, owned by the quantifier's player), clause-hit propositions,
/// and the goal "pass the start, then complete every clause".
struct SneInstance {
  GameArena arena;
  AttackTree tree;
};
SneInstance qbf_to_sne(const QbfInstance& q);

/// Same chain with both players merged: a path picks an assignment, so path
/// membership is plain satisfiability.
struct PneInstance {
  GameArena arena;
  TransitionSystem system;  // merge of arena
  AttackTree tree;
};
PneInstance sat_to_pne(const std::vector<std::vector<int>>& clauses,
                       int num_vars);

/// All-universal chain with a constant Attacker strategy: the strategy wins
/// iff every assignment satisfies the clauses.
struct SmInstance {
  GameArena arena;
  AttackTree tree;
  MemorylessStrategy strategy;
  PosId from;
};
SmInstance aqbf_to_sm(const std::vector<std::vector<int>>& clauses,
                      int num_vars);

}  // namespace atg
