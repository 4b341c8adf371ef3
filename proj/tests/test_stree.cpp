#include "doctest.h"

#include <string>
#include <vector>

#include "atg/fixtures.hpp"
#include "atg/model.hpp"
#include "atg/parse.hpp"
#include "atg/stree.hpp"

using namespace atg;

namespace {

struct Museum {
  GameArena arena = parse_arena(fixtures::kThiefArena);
  STree waiting = parse_stree(fixtures::kWaitingStree);
  STree prefix = parse_stree(fixtures::kWaitingPrefixStree);
  STree pruned = parse_stree(fixtures::kPrunedStree);
};

}  // namespace

TEST_CASE("tree building from histories") {
  STree t = parse_stree("(a (b (a)) (c))");
  CHECK(validate_stree(stree_histories(t)) == t);

  CHECK_THROWS_AS(validate_stree({}), ModelError);
  CHECK_THROWS_AS(validate_stree({{"a"}, {"b"}}), ModelError);
  // not prefix-closed: a->b->a without a->b
  CHECK_THROWS_AS(validate_stree({{"a"}, {"a", "b", "a"}}), ModelError);
}

TEST_CASE("history enumeration and measures") {
  Museum m;
  CHECK(stree_node_count(m.waiting) == 11);
  CHECK(stree_depth(m.waiting) == 4);
  CHECK(stree_node_count(m.prefix) == 5);
  CHECK(stree_depth(m.prefix) == 3);
  CHECK(stree_depth(STree{"om", {}}) == 1);

  std::vector<std::vector<std::string>> leaves = stree_leaf_histories(m.prefix);
  // children are kept sorted by position name, so od1 enumerates before om
  std::vector<std::vector<std::string>> expect = {
      {"od1", "od1", "d2d1"}, {"od1", "od1", "d2m"}, {"od1", "om"}};
  CHECK(leaves == expect);
}

TEST_CASE("prefix relation on the museum trees") {
  Museum m;
  CHECK(is_prefix(m.waiting, m.waiting));
  CHECK(is_prefix(m.prefix, m.waiting));
  CHECK_FALSE(is_prefix(m.waiting, m.prefix));
  // pruned keeps only one child of the root, so it is no prefix
  CHECK_FALSE(is_prefix(m.pruned, m.waiting));
  CHECK_FALSE(is_prefix(m.pruned, m.prefix));
  // different root
  CHECK_FALSE(is_prefix(STree{"om", {}}, m.waiting));
}

TEST_CASE("well-formedness of the museum trees") {
  Museum m;
  WellFormedness full = is_well_formed(m.arena, m.waiting);
  CHECK(full.ok);
  CHECK(full.certificate.size() == 5);  // one entry per internal node

  WellFormedness cut = is_well_formed(m.arena, m.prefix);
  CHECK(cut.ok);

  // At (o,d1) no single thief action yields exactly {od1}.
  WellFormedness bad = is_well_formed(m.arena, m.pruned);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.reason.empty());

  STree unknown{"nowhere", {}};
  CHECK_THROWS_AS(is_well_formed(m.arena, unknown), ModelError);
}

TEST_CASE("witness checks distinguish goals") {
  Museum m;
  AttackTree or_leaves =
      parse_tree("(OR (and D1 (not W)) (and D2 (not W)))", m.arena.props);
  AttackTree or_doors = parse_tree(fixtures::kOrDoorsTree, m.arena.props);
  AttackTree door2 = parse_tree(fixtures::kDoor2Tree, m.arena.props);

  // Every maximal history of the full tree ends at an unwatched door.
  CHECK(check_witness(m.arena, m.waiting, or_leaves));
  // But two branches end at door 1, so door 2 alone is not attained...
  CHECK_FALSE(check_witness(m.arena, m.waiting, door2));
  // ...and no history passes a start-labeled position.
  CHECK_FALSE(check_witness(m.arena, m.waiting, or_doors));

  // The reachability target {om, d2d1, d2m} from the truncation example.
  AttackTree target =
      parse_tree("(or start (and D2 (not W)))", m.arena.props);
  CHECK(check_witness(m.arena, m.prefix, target));

  // Not well-formed, hence no witness for anything, even a trivial goal.
  CHECK_FALSE(check_witness(m.arena, m.pruned, AttackTree::leaf(
                                                   BooleanFormula::constant(true))));
}

TEST_CASE("strategy unfolding") {
  Museum m;
  MemorylessStrategy wait = parse_strategy(fixtures::kWaitStrategy, m.arena);
  MemorylessStrategy cross = parse_strategy(fixtures::kCrossStrategy, m.arena);
  PosId om = m.arena.position_id("om");
  PosId od1 = m.arena.position_id("od1");

  CHECK(unfold_strategy(m.arena, wait, od1, 1) == STree{"od1", {}});
  STree two = unfold_strategy(m.arena, wait, od1, 2);
  CHECK(two == parse_stree("(od1 (om) (od1))"));
  CHECK(is_prefix(two, m.waiting));

  // One level deeper the memoryless waiter diverges from the bundled tree,
  // which switches to door crossing after observing the guard twice.
  STree three = unfold_strategy(m.arena, wait, od1, 3);
  CHECK_FALSE(is_prefix(three, m.waiting));

  STree crossing = unfold_strategy(m.arena, cross, om, 3);
  CHECK(crossing ==
        parse_stree("(om (od1 (d2d1) (d2m)) (od2 (d1d2) (d1m)))"));
  CHECK(is_well_formed(m.arena, crossing).ok);

  CHECK_THROWS_AS(unfold_strategy(m.arena, wait, om, 0), ModelError);
}
