#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atg/model.hpp"
#include "atg/path_semantics.hpp"

namespace atg {

/// Build a strategic tree from a set of histories (sequences of position
/// names). The set must be nonempty, share one root, and be prefix-closed;
/// anything else raises ModelError.
STree validate_stree(const std::vector<std::vector<std::string>>& histories);

/// Every history the tree contains (one per node), preorder.
std::vector<std::vector<std::string>> stree_histories(const STree& tree);

/// Histories of the maximal nodes only.
std::vector<std::vector<std::string>> stree_leaf_histories(const STree& tree);

int stree_node_count(const STree& tree);
/// Number of tree levels (a lone root has depth 1).
int stree_depth(const STree& tree);

/// Tree prefix: same root, node subset, and every node that keeps any child
/// keeps all of them.
bool is_prefix(const STree& small, const STree& big);

struct WellFormedness {
  bool ok = false;
  std::string reason;  // set when !ok
  /// One entry per internal node in preorder: the node's history and an
  /// Attacker action whose successor set equals the node's children.
  std::vector<std::pair<std::vector<std::string>, ActId>> certificate;
};

/// A tree is well-formed when every internal node's children are exactly the
/// successors of some single Attacker action at that node's last position.
/// Unknown position names raise ModelError.
WellFormedness is_well_formed(const GameArena& arena, const STree& tree);

/// Depth-bounded unfolding of a positional strategy: each level applies the
/// chosen action and branches over all Defender replies. depth counts
/// levels and must be at least 1.
STree unfold_strategy(const GameArena& arena,
                      const MemorylessStrategy& strategy, PosId from,
                      int depth);

/// Witness check: the tree is well-formed and every maximal history is a
/// member of the goal's path set over the merged system.
bool check_witness(const GameArena& arena, const STree& tree,
                   const AttackTree& goal);

}  // namespace atg
