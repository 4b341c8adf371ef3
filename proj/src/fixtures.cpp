#include "atg/fixtures.hpp"
namespace atg::fixtures {
const char* const kThiefArena = R"fx(# Museum entry game: a thief (player 1) against a patrolling guard
# (player 2). Position xy reads: thief at x, guard at y; o = outside,
# m = between the doors, d1/d2 = at door 1/2. W marks positions where the
# guard watches the door the thief came through. Once the thief is inside
# the game is over, so those positions absorb. C, K and R2 describe later
# heist stages that this entry model never reaches.
props: D1 D2 W start C K R2
actions1: wait go1 go2
actions2: stay leave go1 go2

positions: om od1 od2 d1d1 d1d2 d1m d2d1 d2d2 d2m

label om : start
label d1d1 : D1 W
label d1d2 : D1
label d1m : D1
label d2d1 : D2
label d2d2 : D2 W
label d2m : D2

# guard between the doors: every guard move lands at a door
delta om wait stay -> od1
delta om wait go1 -> od1
delta om wait leave -> od2
delta om wait go2 -> od2
delta om go1 stay -> d1d1
delta om go1 go1 -> d1d1
delta om go1 leave -> d1d2
delta om go1 go2 -> d1d2
delta om go2 stay -> d2d1
delta om go2 go1 -> d2d1
delta om go2 leave -> d2d2
delta om go2 go2 -> d2d2

# guard at door 1
delta od1 wait stay -> od1
delta od1 wait go1 -> od1
delta od1 wait leave -> om
delta od1 wait go2 -> om
delta od1 go1 stay -> d1d1
delta od1 go1 go1 -> d1d1
delta od1 go1 leave -> d1m
delta od1 go1 go2 -> d1m
delta od1 go2 stay -> d2d1
delta od1 go2 go1 -> d2d1
delta od1 go2 leave -> d2m
delta od1 go2 go2 -> d2m

# guard at door 2
delta od2 wait stay -> od2
delta od2 wait go2 -> od2
delta od2 wait leave -> om
delta od2 wait go1 -> om
delta od2 go1 stay -> d1d2
delta od2 go1 go2 -> d1d2
delta od2 go1 leave -> d1m
delta od2 go1 go1 -> d1m
delta od2 go2 stay -> d2d2
delta od2 go2 go2 -> d2d2
delta od2 go2 leave -> d2m
delta od2 go2 go1 -> d2m

delta d1d1 * * -> d1d1
delta d1d2 * * -> d1d2
delta d1m * * -> d1m
delta d2d1 * * -> d2d1
delta d2d2 * * -> d2d2
delta d2m * * -> d2m
)fx";
const char* const kToyArena = R"fx(# Two-position toy: player 1 either stays at a or jumps to b; b absorbs.
props: P Q
actions1: x y
actions2: u

positions: a b

label a : Q
label b : P

delta a x u -> a
delta a y u -> b
delta b * * -> b
)fx";
const char* const kDoor1Tree = R"fx(# through door 1 while the guard is elsewhere
(and D1 (not W))
)fx";
const char* const kDoor2Tree = R"fx(# through door 2 while the guard is elsewhere
(and D2 (not W))
)fx";
const char* const kSandDoor1Tree = R"fx(# start outside, then get through door 1 unseen
(SAND start (and D1 (not W)))
)fx";
const char* const kSandDoor2Tree = R"fx(# start outside, then get through door 2 unseen
(SAND start (and D2 (not W)))
)fx";
const char* const kOrDoorsTree = R"fx(# start outside, then get through either door unseen
(OR (SAND start (and D1 (not W))) (SAND start (and D2 (not W))))
)fx";
const char* const kHeistTree = R"fx(# full heist: enter unseen, collect the code and the key in any order,
# then open the second room
(SAND (OR (and D1 (not W)) (and D2 (not W))) (AND C K) R2)
)fx";
const char* const kToyPTree = R"fx(P
)fx";
const char* const kToySandQpTree = R"fx((SAND Q P)
)fx";
const char* const kToyAndPqTree = R"fx((AND P Q)
)fx";
const char* const kWaitingStree = R"fx(# four levels of the waiting strategy: keep waiting while the guard sits at
# door 1, cross the far door as soon as the guard commits
(od1 (om (od1 (d2d1) (d2m)) (od2 (d1d2) (d1m))) (od1 (d2d1) (d2m)))
)fx";
const char* const kWaitingPrefixStree = R"fx(# prefix of waiting.stree: the om branch is cut after one level
(od1 (om) (od1 (d2d1) (d2m)))
)fx";
const char* const kPrunedStree = R"fx(# waiting.stree with the om branch removed entirely; the root then keeps
# only one of the two guard replies, so no single action explains it
(od1 (od1 (d2d1) (d2m)))
)fx";
const char* const kCrossStrategy = R"fx(# wait outside until the guard commits to a door, then take the other one
om -> wait
od1 -> go2
od2 -> go1
d1d1 -> wait
d1d2 -> wait
d1m -> wait
d2d1 -> wait
d2d2 -> wait
d2m -> wait
)fx";
const char* const kWaitStrategy = R"fx(# never move
om -> wait
od1 -> wait
od2 -> wait
d1d1 -> wait
d1d2 -> wait
d1m -> wait
d2d1 -> wait
d2d2 -> wait
d2m -> wait
)fx";
const char* const kExampleQdimacs = R"fx(c exists x1 forall x2 exists x3 : x1 and (x2 or x3) and (not x2 or x3)
p cnf 3 3
e 1 0
a 2 0
e 3 0
1 0
2 3 0
-2 3 0
)fx";
const std::vector<NamedText>& all_files() {
  static const std::vector<NamedText> files = {
      {"thief.arena", kThiefArena},
      {"toy.arena", kToyArena},
      {"door1.tree", kDoor1Tree},
      {"door2.tree", kDoor2Tree},
      {"sand_door1.tree", kSandDoor1Tree},
      {"sand_door2.tree", kSandDoor2Tree},
      {"or_doors.tree", kOrDoorsTree},
      {"heist.tree", kHeistTree},
      {"toy_p.tree", kToyPTree},
      {"toy_sand_qp.tree", kToySandQpTree},
      {"toy_and_pq.tree", kToyAndPqTree},
      {"waiting.stree", kWaitingStree},
      {"waiting_prefix.stree", kWaitingPrefixStree},
      {"pruned.stree", kPrunedStree},
      {"cross.strategy", kCrossStrategy},
      {"wait.strategy", kWaitStrategy},
      {"example.qdimacs", kExampleQdimacs},
  };
  return files;
}

const std::vector<ArenaTreePair>& arena_tree_pairs() {
  static const std::vector<ArenaTreePair> pairs = {
      {"thief.arena", kThiefArena, "door1.tree", kDoor1Tree},
      {"thief.arena", kThiefArena, "door2.tree", kDoor2Tree},
      {"thief.arena", kThiefArena, "sand_door1.tree", kSandDoor1Tree},
      {"thief.arena", kThiefArena, "sand_door2.tree", kSandDoor2Tree},
      {"thief.arena", kThiefArena, "or_doors.tree", kOrDoorsTree},
      {"thief.arena", kThiefArena, "heist.tree", kHeistTree},
      {"toy.arena", kToyArena, "toy_p.tree", kToyPTree},
      {"toy.arena", kToyArena, "toy_sand_qp.tree", kToySandQpTree},
      {"toy.arena", kToyArena, "toy_and_pq.tree", kToyAndPqTree},
  };
  return pairs;
}

}  // namespace atg::fixtures
