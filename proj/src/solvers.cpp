#include "atg/solvers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "atg/path_semantics.hpp"

namespace atg {

namespace {

void check_from(int from, int limit, const char* what) {
  if (from < 0 || from >= limit) {
    throw ModelError(std::string("start ") + what + " out of range");
  }
}

/// Product node interning shared by the reachability solvers. Nodes are
/// numbered in discovery order, so every run is deterministic.
struct ProductSpace {
  std::map<std::pair<PosId, int>, int> ids;
  std::vector<std::pair<PosId, int>> nodes;

  int intern(PosId s, int q) {
    auto [it, fresh] = ids.try_emplace({s, q}, static_cast<int>(nodes.size()));
    if (fresh) nodes.emplace_back(s, q);
    return it->second;
  }
  int size() const { return static_cast<int>(nodes.size()); }
};

}  // namespace

QueryResult pne(const TransitionSystem& ts, const AttackTree& goal,
                std::optional<PosId> from, PneMethod method,
                const SolveOptions& options) {
  ts.check(true);
  QueryResult result;
  SemanticsAutomaton dfa =
      build_automaton(ts, goal, {options.automaton_state_cap});
  result.stats.automaton_states = dfa.num_states();

  std::vector<PosId> start_states;
  if (from) {
    check_from(*from, ts.num_states(), "state");
    start_states.push_back(*from);
  } else {
    for (PosId s = 0; s < ts.num_states(); ++s) start_states.push_back(s);
  }

  ProductSpace space;
  std::vector<int> parent;  // product index of the predecessor, -1 at starts
  int found = -1;

  auto visit = [&](PosId s, int q, int par) {
    int before = space.size();
    int id = space.intern(s, q);
    if (id != before) return -1;  // already known
    parent.push_back(par);
    return id;
  };

  if (method == PneMethod::BfsProduct) {
    std::vector<int> queue;
    for (PosId s : start_states) {
      int id = visit(s, dfa.step(dfa.initial, s), -1);
      if (id >= 0) queue.push_back(id);
    }
    for (size_t head = 0; head < queue.size() && found < 0; ++head) {
      int id = queue[head];
      auto [s, q] = space.nodes[id];
      if (dfa.accepting[q]) {
        found = id;
        break;
      }
      for (PosId t : ts.succ[s]) {
        int child = visit(t, dfa.step(q, t), id);
        if (child >= 0) queue.push_back(child);
      }
    }
  } else {
    // depth-first: explicit stack of (product node, next successor slot)
    std::vector<std::pair<int, size_t>> stack;
    for (PosId s : start_states) {
      if (found >= 0) break;
      int id = visit(s, dfa.step(dfa.initial, s), -1);
      if (id < 0) continue;
      stack.emplace_back(id, 0);
      while (!stack.empty() && found < 0) {
        auto& [node, slot] = stack.back();
        auto [sn, qn] = space.nodes[node];
        if (dfa.accepting[qn]) {
          found = node;
          break;
        }
        if (slot >= ts.succ[sn].size()) {
          stack.pop_back();
          continue;
        }
        PosId t = ts.succ[sn][slot++];
        int child = visit(t, dfa.step(qn, t), node);
        if (child >= 0) stack.emplace_back(child, 0);
      }
      stack.clear();
    }
  }

  result.stats.nodes = space.size();
  result.yes = found >= 0;
  if (result.yes) {
    Path w;
    for (int id = found; id >= 0; id = parent[id]) {
      w.states.push_back(space.nodes[id].first);
    }
    std::reverse(w.states.begin(), w.states.end());
    result.path_witness = std::move(w);
  }
  return result;
}

const AttractorTable::Entry* AttractorTable::find(PosId position,
                                                  int dstate) const {
  for (const Entry& e : winning) {
    if (e.position == position && e.dstate == dstate) return &e;
  }
  return nullptr;
}

AttractorTable solve_attractor(
    const GameArena& arena, const SemanticsAutomaton& dfa,
    const std::vector<std::pair<PosId, int>>& starts) {
  AttractorTable table;
  ProductSpace space;
  for (auto [s, q] : starts) space.intern(s, q);

  // reachable part, breadth-first over all joint moves
  for (int head = 0; head < space.size(); ++head) {
    auto [s, q] = space.nodes[head];
    for (ActId a1 = 0; a1 < arena.num_actions1(); ++a1) {
      for (PosId t : arena.successors(s, a1)) {
        space.intern(t, dfa.step(q, t));
      }
    }
  }
  table.reachable = space.size();

  // ranks: accepting nodes are rank 0; a node enters at round r+1 when some
  // action sends every Defender reply into ranks <= r. Rounds are
  // synchronous, so ranks are exact.
  std::vector<int> rank(space.size(), -1);
  std::vector<ActId> choice(space.size(), -1);
  for (int id = 0; id < space.size(); ++id) {
    if (dfa.accepting[space.nodes[id].second]) rank[id] = 0;
  }
  int round = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++round;
    std::vector<std::pair<int, ActId>> additions;
    for (int id = 0; id < space.size(); ++id) {
      if (rank[id] >= 0) continue;
      auto [s, q] = space.nodes[id];
      for (ActId a1 = 0; a1 < arena.num_actions1(); ++a1) {
        bool sure = true;
        for (PosId t : arena.successors(s, a1)) {
          int child = space.intern(t, dfa.step(q, t));
          if (rank[child] < 0) {
            sure = false;
            break;
          }
        }
        if (sure) {
          additions.emplace_back(id, a1);
          break;
        }
      }
    }
    for (auto [id, a1] : additions) {
      rank[id] = round;
      choice[id] = a1;
      changed = true;
    }
  }
  table.rounds = round - 1;  // final round adds nothing

  for (int id = 0; id < space.size(); ++id) {
    if (rank[id] >= 0) {
      table.winning.push_back(
          {space.nodes[id].first, space.nodes[id].second, rank[id], choice[id]});
    }
  }
  return table;
}

namespace {

STree attractor_witness(const GameArena& arena, const SemanticsAutomaton& dfa,
                        const AttractorTable& table, PosId s, int q) {
  STree node;
  node.pos = arena.positions[s];
  if (dfa.accepting[q]) return node;  // play won, prune here
  const AttractorTable::Entry* e = table.find(s, q);
  for (PosId t : arena.successors(s, e->choice)) {
    node.children.push_back(
        attractor_witness(arena, dfa, table, t, dfa.step(q, t)));
  }
  std::sort(node.children.begin(), node.children.end(),
            [](const STree& a, const STree& b) { return a.pos < b.pos; });
  return node;
}

}  // namespace

QueryResult sne_attractor(const GameArena& arena, const AttackTree& goal,
                          std::optional<PosId> from,
                          const SolveOptions& options) {
  arena.check();
  QueryResult result;
  TransitionSystem ts = arena.to_transition_system();
  SemanticsAutomaton dfa =
      build_automaton(ts, goal, {options.automaton_state_cap});
  result.stats.automaton_states = dfa.num_states();

  std::vector<std::pair<PosId, int>> starts;
  if (from) {
    check_from(*from, arena.num_positions(), "position");
    starts.emplace_back(*from, dfa.step(dfa.initial, *from));
  } else {
    for (PosId p = 0; p < arena.num_positions(); ++p) {
      starts.emplace_back(p, dfa.step(dfa.initial, p));
    }
  }

  AttractorTable table = solve_attractor(arena, dfa, starts);
  result.stats.nodes = table.reachable;
  result.stats.iterations = table.rounds;

  for (auto [s, q] : starts) {
    if (table.find(s, q)) {
      result.yes = true;
      result.stree_witness = attractor_witness(arena, dfa, table, s, q);
      break;
    }
  }
  return result;
}

namespace {

struct Alg1Search {
  const GameArena& arena;
  const TransitionSystem& ts;
  const AttackTree& goal;
  int bound;
  bool early_exit;
  long long calls = 0;

  bool member(const Path& h) { return pm_check(ts, goal, h); }

  bool run(Path& h) {
    ++calls;
    if (early_exit && member(h)) return true;
    if (h.size() >= bound) return early_exit ? false : member(h);

    // existential turn: each action once per distinct successor set
    PosId p = h.last();
    std::set<std::vector<PosId>> seen;
    for (ActId a1 = 0; a1 < arena.num_actions1(); ++a1) {
      std::vector<PosId> succs = arena.successors(p, a1);
      if (!seen.insert(succs).second) continue;
      bool sure = true;
      for (PosId t : succs) {  // universal turn
        h.states.push_back(t);
        bool sub = run(h);
        h.states.pop_back();
        if (!sub) {
          sure = false;
          break;
        }
      }
      if (sure) return true;
    }
    // stop branch: membership is tested where the search leaves the loop
    return early_exit ? false : member(h);
  }
};

}  // namespace

QueryResult sne_alg1(const GameArena& arena, const AttackTree& goal,
                     std::optional<PosId> from, const SolveOptions& options) {
  arena.check();
  QueryResult result;
  TransitionSystem ts = arena.to_transition_system();
  int bound = arena.num_positions() * goal.leaf_count();
  Alg1Search search{arena, ts, goal, bound, options.alg1_early_exit};

  std::vector<PosId> starts;
  if (from) {
    check_from(*from, arena.num_positions(), "position");
    starts.push_back(*from);
  } else {
    for (PosId p = 0; p < arena.num_positions(); ++p) starts.push_back(p);
  }
  for (PosId p : starts) {
    // Deepen the round budget one step at a time. A run that wins within k
    // rounds wins within any larger budget, and the last iteration is the
    // full-bound search, so the verdict is unchanged; shallow witnesses are
    // just found before the deep exponential search is exhausted.
    for (int k = 1; k <= bound && !result.yes; ++k) {
      search.bound = k;
      Path h;
      h.states.push_back(p);
      if (search.run(h)) result.yes = true;
    }
    if (result.yes) break;
  }
  result.stats.iterations = search.calls;
  result.stats.nodes = search.calls;
  return result;
}

QueryResult sm_explicit(const GameArena& arena, const AttackTree& goal,
                        const STree& tree) {
  arena.check();
  QueryResult result;
  result.yes = check_witness(arena, tree, goal);
  result.stats.nodes = stree_node_count(tree);
  return result;
}

QueryResult sm_memoryless(const GameArena& arena, const AttackTree& goal,
                          const MemorylessStrategy& strategy, PosId from,
                          const SolveOptions& options) {
  arena.check();
  check_from(from, arena.num_positions(), "position");
  if (strategy.choice.size() != arena.positions.size()) {
    throw ModelError("strategy does not cover every position");
  }
  for (PosId p = 0; p < arena.num_positions(); ++p) {
    ActId a = strategy.choice[p];
    if (a < 0 || a >= arena.num_actions1()) {
      throw ModelError("strategy action out of range at position '" +
                       arena.positions[p] + "'");
    }
  }

  QueryResult result;
  TransitionSystem ts = arena.to_transition_system();
  SemanticsAutomaton dfa =
      build_automaton(ts, goal, {options.automaton_state_cap});
  result.stats.automaton_states = dfa.num_states();

  // Restricted product: plays are pruned at accepting states; the strategy
  // wins iff no cycle of non-accepting product states is reachable.
  ProductSpace space;
  space.intern(from, dfa.step(dfa.initial, from));
  enum Color { White, Grey, Black };
  std::vector<Color> color;
  bool cycle = false;

  std::vector<std::pair<int, size_t>> stack;
  stack.emplace_back(0, 0);
  color.push_back(White);
  while (!stack.empty() && !cycle) {
    auto& [id, slot] = stack.back();
    auto [s, q] = space.nodes[id];
    if (slot == 0) color[id] = Grey;
    if (dfa.accepting[q]) {
      color[id] = Black;
      stack.pop_back();
      continue;
    }
    const std::vector<PosId> succs = arena.successors(s, strategy.choice[s]);
    if (slot >= succs.size()) {
      color[id] = Black;
      stack.pop_back();
      continue;
    }
    PosId t = succs[slot++];
    int before = space.size();
    int child = space.intern(t, dfa.step(q, t));
    if (child == before) color.push_back(White);
    if (color[child] == Grey) {
      cycle = true;
    } else if (color[child] == White) {
      stack.emplace_back(child, 0);
    }
  }

  result.stats.nodes = space.size();
  result.yes = !cycle;
  return result;
}

}  // namespace atg
