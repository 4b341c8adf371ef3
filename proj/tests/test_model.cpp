#include "doctest.h"

#include "atg/fixtures.hpp"
#include "atg/model.hpp"
#include "atg/parse.hpp"

using namespace atg;

TEST_CASE("formula evaluation") {
  BooleanFormula f = BooleanFormula::disjunction(
      {BooleanFormula::conjunction(
           {BooleanFormula::atom(0),
            BooleanFormula::negation(BooleanFormula::atom(1))}),
       BooleanFormula::constant(false)});
  CHECK(f.eval({true, false}));
  CHECK_FALSE(f.eval({true, true}));
  CHECK_FALSE(f.eval({false, false}));
  CHECK(f.max_prop() == 1);
  CHECK(BooleanFormula::constant(true).max_prop() == -1);
  CHECK(f == f);
  CHECK_FALSE(f == BooleanFormula::atom(0));
}

TEST_CASE("attack tree shape counters") {
  AttackTree leaf = AttackTree::leaf(BooleanFormula::atom(0));
  CHECK(leaf.node_count() == 1);
  CHECK(leaf.leaf_count() == 1);
  CHECK(leaf.depth() == 1);

  AttackTree t = AttackTree::node(
      AttackTree::Op::Sand,
      {AttackTree::node(AttackTree::Op::Or,
                        {AttackTree::leaf(BooleanFormula::atom(0)),
                         AttackTree::leaf(BooleanFormula::atom(2))}),
       AttackTree::leaf(BooleanFormula::atom(1))});
  CHECK(t.node_count() == 5);
  CHECK(t.leaf_count() == 3);
  CHECK(t.depth() == 3);
  CHECK(t.max_prop() == 2);

  CHECK_THROWS_AS(AttackTree::node(AttackTree::Op::Or, {}), ModelError);
  CHECK_THROWS_AS(
      AttackTree::node(AttackTree::Op::Leaf,
                       {AttackTree::leaf(BooleanFormula::atom(0))}),
      ModelError);
}

TEST_CASE("toy arena structure") {
  GameArena arena = parse_arena(fixtures::kToyArena);
  arena.check();
  CHECK(arena.num_positions() == 2);
  CHECK(arena.num_actions1() == 2);
  CHECK(arena.num_actions2() == 1);
  PosId a = arena.position_id("a"), b = arena.position_id("b");
  ActId x = arena.action1_id("x"), y = arena.action1_id("y");
  ActId u = arena.action2_id("u");
  CHECK(arena.delta(a, x, u) == a);
  CHECK(arena.delta(a, y, u) == b);
  CHECK(arena.delta(b, x, u) == b);
  CHECK(arena.successors(a, x) == std::vector<PosId>{a});
  CHECK(arena.successors(a, y) == std::vector<PosId>{b});
  CHECK_THROWS_AS(arena.position_id("zz"), ModelError);
  CHECK_THROWS_AS(arena.action1_id("u"), ModelError);

  TransitionSystem ts = arena.to_transition_system();
  ts.check(true);
  CHECK(ts.succ[a] == std::vector<PosId>{a, b});
  CHECK(ts.succ[b] == std::vector<PosId>{b});
  CHECK_FALSE(ts.valuation[a][0]);
  CHECK(ts.valuation[a][1]);
  CHECK(ts.valuation[b][0]);
  CHECK_FALSE(ts.valuation[b][1]);
}

TEST_CASE("transition system validation") {
  TransitionSystem ts;
  ts.props = {"P"};
  ts.states = {"s", "t"};
  ts.succ = {{1, 0}, {}};  // unsorted
  ts.valuation = {{true}, {false}};
  CHECK_THROWS_AS(ts.check(), ModelError);
  ts.succ = {{0, 1}, {}};
  ts.check();
  CHECK_THROWS_AS(ts.check(true), ModelError);  // t has no successor
  ts.succ = {{0, 1}, {1}};
  ts.check(true);
  CHECK(ts.has_edge(0, 1));
  CHECK_FALSE(ts.has_edge(1, 0));
  CHECK_THROWS_AS(ts.state_id("nope"), ModelError);
}

TEST_CASE("valid paths") {
  GameArena arena = parse_arena(fixtures::kToyArena);
  TransitionSystem ts = arena.to_transition_system();
  CHECK(is_valid_path(ts, Path{{0}}));
  CHECK(is_valid_path(ts, Path{{0, 0, 1, 1}}));
  CHECK_FALSE(is_valid_path(ts, Path{{1, 0}}));
  CHECK_FALSE(is_valid_path(ts, Path{{}}));
}

TEST_CASE("name lookup") {
  std::vector<std::string> names = {"alpha", "beta"};
  CHECK(find_name(names, "beta") == 1);
  CHECK(find_name(names, "gamma") == -1);
}
