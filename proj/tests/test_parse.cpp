#include "doctest.h"

#include "atg/fixtures.hpp"
#include "atg/model.hpp"
#include "atg/parse.hpp"

using namespace atg;

TEST_CASE("arena headers in any order") {
  const char* reordered =
      "positions: a b\n"
      "actions2: u\n"
      "props: P Q\n"
      "actions1: x y\n"
      "label a : Q\n"
      "label b : P\n"
      "delta a x u -> a\n"
      "delta a y u -> b\n"
      "delta b * * -> b\n";
  GameArena a = parse_arena(reordered);
  GameArena b = parse_arena(fixtures::kToyArena);
  CHECK(print_arena(a) == print_arena(b));
}

TEST_CASE("arena round-trips through its printer") {
  for (const char* text : {fixtures::kThiefArena, fixtures::kToyArena}) {
    GameArena once = parse_arena(text);
    GameArena twice = parse_arena(print_arena(once));
    CHECK(once.positions == twice.positions);
    CHECK(once.props == twice.props);
    CHECK(once.actions1 == twice.actions1);
    CHECK(once.actions2 == twice.actions2);
    CHECK(once.delta_table == twice.delta_table);
    CHECK(once.valuation == twice.valuation);
  }
}

TEST_CASE("arena delta rules") {
  std::string base =
      "props: P\n"
      "actions1: x y\n"
      "actions2: u v\n"
      "positions: a b\n";

  SUBCASE("exact row overrides a wildcard row") {
    GameArena g = parse_arena(base +
                              "delta a * * -> a\n"
                              "delta a x v -> b\n"
                              "delta b * * -> b\n");
    CHECK(g.delta(0, 0, 1) == 1);
    CHECK(g.delta(0, 0, 0) == 0);
    CHECK(g.delta(0, 1, 1) == 0);
  }
  SUBCASE("half-wildcard rows fill rows and columns") {
    GameArena g = parse_arena(base +
                              "delta a x * -> b\n"
                              "delta a y * -> a\n"
                              "delta b * u -> a\n"
                              "delta b * v -> b\n");
    CHECK(g.delta(0, 0, 0) == 1);
    CHECK(g.delta(0, 0, 1) == 1);
    CHECK(g.delta(1, 1, 0) == 0);
    CHECK(g.delta(1, 1, 1) == 1);
  }
  SUBCASE("equal-specificity overlap must agree") {
    CHECK_THROWS_AS(parse_arena(base +
                                "delta a x * -> a\n"
                                "delta a * u -> b\n"
                                "delta a y * -> a\n"
                                "delta a * v -> a\n"
                                "delta b * * -> b\n"),
                    ParseError);
    // same overlap, same target: fine
    GameArena g = parse_arena(base +
                              "delta a x * -> a\n"
                              "delta a * u -> a\n"
                              "delta a y * -> a\n"
                              "delta a * v -> a\n"
                              "delta b * * -> b\n");
    CHECK(g.delta(0, 0, 0) == 0);
  }
  SUBCASE("duplicate exact rows are rejected even when they agree") {
    CHECK_THROWS_AS(parse_arena(base +
                                "delta a x u -> a\n"
                                "delta a x u -> a\n"
                                "delta a * * -> a\n"
                                "delta b * * -> b\n"),
                    ParseError);
  }
  SUBCASE("missing cells are an error") {
    CHECK_THROWS_AS(parse_arena(base + "delta a * * -> a\n"), ParseError);
  }
  SUBCASE("unknown names are an error") {
    CHECK_THROWS_AS(parse_arena(base +
                                "delta c * * -> a\n"
                                "delta a * * -> a\n"
                                "delta b * * -> b\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_arena(base +
                                "label a : Q\n"
                                "delta a * * -> a\n"
                                "delta b * * -> b\n"),
                    ParseError);
  }
  SUBCASE("repeated label line is an error") {
    CHECK_THROWS_AS(parse_arena(base +
                                "label a : P\n"
                                "label a : P\n"
                                "delta a * * -> a\n"
                                "delta b * * -> b\n"),
                    ParseError);
  }
  SUBCASE("missing header is an error") {
    CHECK_THROWS_AS(parse_arena("props: P\nactions1: x\npositions: a\n"
                                "delta a x x -> a\n"),
                    ParseError);
  }
}

TEST_CASE("tree syntax") {
  std::vector<std::string> props = {"D1", "D2", "W", "start"};
  AttackTree t = parse_tree("(SAND start (and D1 (not W)))", props);
  REQUIRE(t.op == AttackTree::Op::Sand);
  REQUIRE(t.children.size() == 2);
  CHECK(t.children[0].op == AttackTree::Op::Leaf);
  CHECK(t.children[0].formula == BooleanFormula::atom(3));
  CHECK(t.children[1].formula ==
        BooleanFormula::conjunction(
            {BooleanFormula::atom(0),
             BooleanFormula::negation(BooleanFormula::atom(2))}));

  // printing and reparsing is the identity
  AttackTree u = parse_tree(fixtures::kOrDoorsTree, props);
  CHECK(parse_tree(print_tree(u, props), props) == u);
  CHECK(print_tree(parse_tree("D1", props), props) == "D1");

  CHECK(parse_tree("(or true false)", props).formula.eval({}) == true);
  CHECK_THROWS_AS(parse_tree("(FOO D1)", props), ParseError);
  CHECK_THROWS_AS(parse_tree("(OR)", props), ParseError);
  CHECK_THROWS_AS(parse_tree("(not D1 D2)", props), ParseError);
  CHECK_THROWS_AS(parse_tree("unknown_prop", props), ParseError);
  CHECK_THROWS_AS(parse_tree("(SAND D1) extra", props), ParseError);
}

TEST_CASE("strategic tree syntax") {
  STree t = parse_stree("(b (c) (a (b)))");
  CHECK(t.pos == "b");
  REQUIRE(t.children.size() == 2);
  CHECK(t.children[0].pos == "a");  // canonical order
  CHECK(t.children[1].pos == "c");
  CHECK(print_stree(t) == "(b (a (b)) (c))");
  CHECK(parse_stree(print_stree(t)) == t);
  CHECK_THROWS_AS(parse_stree("(b (a) (a))"), ParseError);
  CHECK_THROWS_AS(parse_stree("(a) (b)"), ParseError);
  CHECK_THROWS_AS(parse_stree(""), ParseError);
}

TEST_CASE("path syntax") {
  GameArena arena = parse_arena(fixtures::kThiefArena);
  TransitionSystem ts = arena.to_transition_system();
  Path p = parse_path("om d1d2", ts);
  CHECK(p.states ==
        std::vector<PosId>{ts.state_id("om"), ts.state_id("d1d2")});
  CHECK(print_path(p, ts) == "om d1d2");
  CHECK(parse_path("om\n  od1 # comment\n", ts).size() == 2);
  CHECK_THROWS_AS(parse_path("om nowhere", ts), ParseError);
  CHECK_THROWS_AS(parse_path("  # only a comment\n", ts), ParseError);
}

TEST_CASE("strategy syntax") {
  GameArena arena = parse_arena(fixtures::kThiefArena);
  MemorylessStrategy s = parse_strategy(fixtures::kCrossStrategy, arena);
  CHECK(s.choice[arena.position_id("om")] == arena.action1_id("wait"));
  CHECK(s.choice[arena.position_id("od1")] == arena.action1_id("go2"));
  CHECK(s.choice[arena.position_id("od2")] == arena.action1_id("go1"));
  CHECK(parse_strategy(print_strategy(s, arena), arena).choice == s.choice);

  CHECK_THROWS_AS(parse_strategy("om -> wait\n", arena), ParseError);
  CHECK_THROWS_AS(parse_strategy(std::string(fixtures::kCrossStrategy) +
                                     "om -> go1\n",
                                 arena),
                  ParseError);
  CHECK_THROWS_AS(parse_strategy(std::string(fixtures::kWaitStrategy) +
                                     "nowhere -> wait\n",
                                 arena),
                  ParseError);
}

TEST_CASE("file io errors") {
  CHECK_THROWS_AS(read_file("/nonexistent/file.txt"), ParseError);
}
