#include "atg/selftest.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "atg/automaton.hpp"
#include "atg/fixtures.hpp"
#include "atg/model.hpp"
#include "atg/parse.hpp"
#include "atg/path_semantics.hpp"
#include "atg/reductions.hpp"
#include "atg/solvers.hpp"
#include "atg/stree.hpp"

namespace atg {
namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string flatten(const std::string& text) {
  std::string out = text;
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

void record_failure(BatteryResult& r, const std::string& what) {
  ++r.failures;
  if (r.notes.empty()) r.notes = "first failure: " + flatten(what);
}

// --- random model generators -------------------------------------------------

BooleanFormula random_formula(Rng& rng, int num_props, int depth) {
  int pick = rand_int(rng, 0, depth > 0 ? 9 : 4);
  if (pick == 0) return BooleanFormula::constant(rand_int(rng, 0, 1) == 1);
  if (pick <= 4) return BooleanFormula::atom(rand_int(rng, 0, num_props - 1));
  if (pick <= 6)
    return BooleanFormula::negation(random_formula(rng, num_props, depth - 1));
  std::vector<BooleanFormula> args;
  args.push_back(random_formula(rng, num_props, depth - 1));
  args.push_back(random_formula(rng, num_props, depth - 1));
  return pick <= 8 ? BooleanFormula::conjunction(std::move(args))
                   : BooleanFormula::disjunction(std::move(args));
}

// Subtree with at most `budget` nodes and at most `levels` levels.
AttackTree random_tree(Rng& rng, int num_props, int budget, int levels) {
  if (levels <= 1 || budget <= 2 || rand_int(rng, 0, 2) == 0)
    return AttackTree::leaf(random_formula(rng, num_props, 2));
  int max_arity = std::min(3, budget - 1);
  int arity = rand_int(rng, 1, max_arity);
  std::vector<int> share(arity, 1);
  for (int extra = budget - 1 - arity; extra > 0; --extra)
    ++share[rand_int(rng, 0, arity - 1)];
  std::vector<AttackTree> children;
  children.reserve(arity);
  for (int i = 0; i < arity; ++i)
    children.push_back(random_tree(rng, num_props, share[i], levels - 1));
  int op_pick = rand_int(rng, 0, 2);
  AttackTree::Op op = op_pick == 0   ? AttackTree::Op::Or
                      : op_pick == 1 ? AttackTree::Op::And
                                     : AttackTree::Op::Sand;
  return AttackTree::node(op, std::move(children));
}

GameArena random_arena(Rng& rng, int num_props, int num_positions, int na1,
                       int na2) {
  GameArena a;
  for (int i = 0; i < num_props; ++i) a.props.push_back("p" + std::to_string(i));
  for (int i = 0; i < num_positions; ++i)
    a.positions.push_back("q" + std::to_string(i));
  for (int i = 0; i < na1; ++i) a.actions1.push_back("a" + std::to_string(i));
  for (int i = 0; i < na2; ++i) a.actions2.push_back("b" + std::to_string(i));
  a.delta_table.resize(static_cast<size_t>(num_positions) * na1 * na2);
  for (auto& target : a.delta_table) target = rand_int(rng, 0, num_positions - 1);
  a.valuation.assign(num_positions, std::vector<bool>(num_props, false));
  for (auto& row : a.valuation)
    for (int p = 0; p < num_props; ++p) row[p] = rand_int(rng, 0, 1) == 1;
  return a;
}

Path random_path(Rng& rng, const TransitionSystem& ts, int max_len) {
  Path p;
  int target = rand_int(rng, 1, max_len);
  PosId cur = rand_int(rng, 0, ts.num_states() - 1);
  p.states.push_back(cur);
  while (p.size() < target && !ts.succ[cur].empty()) {
    const auto& options = ts.succ[cur];
    cur = options[rand_int(rng, 0, static_cast<int>(options.size()) - 1)];
    p.states.push_back(cur);
  }
  return p;
}

// Goal with at most two leaves, as used by the engine-agreement corpus.
AttackTree random_small_goal(Rng& rng, int num_props) {
  AttackTree first = AttackTree::leaf(random_formula(rng, num_props, 1));
  int pick = rand_int(rng, 0, 3);
  if (pick == 0) return first;
  std::vector<AttackTree> children;
  children.push_back(std::move(first));
  children.push_back(AttackTree::leaf(random_formula(rng, num_props, 1)));
  AttackTree::Op op = pick == 1   ? AttackTree::Op::Or
                      : pick == 2 ? AttackTree::Op::And
                                  : AttackTree::Op::Sand;
  return AttackTree::node(op, std::move(children));
}

struct EngineInstance {
  GameArena arena;
  AttackTree goal;
  std::optional<PosId> from;
};

EngineInstance random_engine_instance(Rng& rng) {
  EngineInstance inst;
  inst.arena = random_arena(rng, 2, rand_int(rng, 2, 4), rand_int(rng, 1, 2),
                            rand_int(rng, 1, 2));
  inst.goal = random_small_goal(rng, 2);
  if (rand_int(rng, 0, 1) == 1)
    inst.from = rand_int(rng, 0, inst.arena.num_positions() - 1);
  return inst;
}

// --- QBF generators ----------------------------------------------------------

std::vector<std::vector<int>> random_clauses(Rng& rng, int num_vars,
                                             int max_clauses) {
  int count = rand_int(rng, 1, max_clauses);
  std::vector<std::vector<int>> clauses;
  for (int c = 0; c < count; ++c) {
    int size = rand_int(rng, 1, std::min(3, 2 * num_vars));
    std::set<int> lits;
    while (static_cast<int>(lits.size()) < size) {
      int var = rand_int(rng, 1, num_vars);
      lits.insert(rand_int(rng, 0, 1) == 0 ? var : -var);
    }
    clauses.emplace_back(lits.begin(), lits.end());
  }
  return clauses;
}

QbfInstance random_qbf(Rng& rng, int max_vars, int max_clauses) {
  QbfInstance q;
  int vars = rand_int(rng, 1, max_vars);
  for (int v = 1; v <= vars; ++v)
    q.prefix.emplace_back(rand_int(rng, 0, 1) == 0 ? Quant::Exists : Quant::ForAll,
                          v);
  q.clauses = random_clauses(rng, vars, max_clauses);
  return q;
}

QbfInstance uniform_qbf(Quant quant, const std::vector<std::vector<int>>& clauses,
                        int num_vars) {
  QbfInstance q;
  for (int v = 1; v <= num_vars; ++v) q.prefix.emplace_back(quant, v);
  q.clauses = clauses;
  return q;
}

// --- reduction checks --------------------------------------------------------

void check_sne_reduction(const QbfInstance& q, BatteryResult& r) {
  bool expected = qbf_eval(q);
  SneInstance inst = qbf_to_sne(q);
  PosId start = inst.arena.position_id("Start");
  ++r.cases;
  if (sne_attractor(inst.arena, inst.tree, start).yes != expected) {
    record_failure(r, "attractor vs oracle on " + print_qdimacs(q));
    return;
  }
  if (sne_alg1(inst.arena, inst.tree, start).yes != expected) {
    record_failure(r, "alternating search vs oracle on " + print_qdimacs(q));
    return;
  }
  SolveOptions early;
  early.alg1_early_exit = true;
  if (sne_alg1(inst.arena, inst.tree, start, early).yes != expected)
    record_failure(r, "early-exit search vs oracle on " + print_qdimacs(q));
}

void check_pne_reduction(const std::vector<std::vector<int>>& clauses,
                         int num_vars, BatteryResult& r) {
  QbfInstance logical = uniform_qbf(Quant::Exists, clauses, num_vars);
  bool expected = qbf_eval(logical);
  PneInstance inst = sat_to_pne(clauses, num_vars);
  PosId start = inst.system.state_id("Start");
  ++r.cases;
  QueryResult bfs = pne(inst.system, inst.tree, start, PneMethod::BfsProduct);
  QueryResult dfs = pne(inst.system, inst.tree, start, PneMethod::DfsProduct);
  if (bfs.yes != expected || dfs.yes != expected) {
    record_failure(r, "path search vs oracle on " + print_qdimacs(logical));
    return;
  }
  if (bfs.yes &&
      (!bfs.path_witness || !pm_check(inst.system, inst.tree, *bfs.path_witness)))
    record_failure(r, "path witness fails membership on " + print_qdimacs(logical));
  if (dfs.yes &&
      (!dfs.path_witness || !pm_check(inst.system, inst.tree, *dfs.path_witness)))
    record_failure(r, "dfs witness fails membership on " + print_qdimacs(logical));
}

void check_sm_reduction(const std::vector<std::vector<int>>& clauses,
                        int num_vars, BatteryResult& r) {
  QbfInstance logical = uniform_qbf(Quant::ForAll, clauses, num_vars);
  bool expected = qbf_eval(logical);
  SmInstance inst = aqbf_to_sm(clauses, num_vars);
  ++r.cases;
  if (sm_memoryless(inst.arena, inst.tree, inst.strategy, inst.from).yes !=
      expected)
    record_failure(r, "strategy check vs oracle on " + print_qdimacs(logical));
}

// Clauses over variables 1..v with at most two literals each, no duplicates.
std::vector<std::vector<int>> clause_templates(int num_vars) {
  std::vector<int> lits;
  for (int v = 1; v <= num_vars; ++v) {
    lits.push_back(v);
    lits.push_back(-v);
  }
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < lits.size(); ++i) {
    out.push_back({lits[i]});
    for (size_t j = i + 1; j < lits.size(); ++j)
      out.push_back({lits[i], lits[j]});
  }
  return out;
}

// --- bounded set semantics (independent of both membership engines) ---------

PathSet truncate_set(const PathSet& s, int max_len) {
  PathSet out;
  for (const Path& p : s)
    if (p.size() <= max_len) out.insert(p);
  return out;
}

PathSet bounded_set(const TransitionSystem& ts, const AttackTree& t,
                    const std::vector<Path>& all, int max_len) {
  switch (t.op) {
    case AttackTree::Op::Leaf: {
      std::vector<bool> sat = sat_states(ts, t.formula);
      PathSet out;
      for (const Path& p : all)
        if (sat[p.last()]) out.insert(p);
      return out;
    }
    case AttackTree::Op::Or: {
      PathSet out;
      for (const AttackTree& c : t.children) {
        PathSet cs = bounded_set(ts, c, all, max_len);
        out.insert(cs.begin(), cs.end());
      }
      return out;
    }
    case AttackTree::Op::And: {
      std::vector<PathSet> sets;
      for (const AttackTree& c : t.children)
        sets.push_back(bounded_set(ts, c, all, max_len));
      return merge_sets(sets);
    }
    case AttackTree::Op::Sand: {
      PathSet acc = bounded_set(ts, t.children[0], all, max_len);
      for (size_t i = 1; i < t.children.size(); ++i)
        acc = truncate_set(
            sync_concat(acc, bounded_set(ts, t.children[i], all, max_len)),
            max_len);
      return acc;
    }
  }
  return {};
}

// --- s-tree helpers ----------------------------------------------------------

MemorylessStrategy random_strategy(Rng& rng, const GameArena& arena) {
  MemorylessStrategy s;
  s.choice.resize(arena.num_positions());
  for (auto& c : s.choice) c = rand_int(rng, 0, arena.num_actions1() - 1);
  return s;
}

// Keep all children of a node or drop all of them; preserves tree prefixes.
STree prune(Rng& rng, const STree& t) {
  STree out;
  out.pos = t.pos;
  if (t.children.empty() || rand_int(rng, 0, 2) == 0) return out;
  for (const STree& c : t.children) out.children.push_back(prune(rng, c));
  return out;
}

const STree* find_node(const STree& t, const std::vector<std::string>& history,
                       size_t at = 0) {
  if (history[at] != t.pos) return nullptr;
  if (at + 1 == history.size()) return &t;
  for (const STree& c : t.children) {
    if (c.pos != history[at + 1]) continue;
    return find_node(c, history, at + 1);
  }
  return nullptr;
}

STree certificate_unfold(
    const GameArena& arena,
    const std::map<std::vector<std::string>, ActId>& certificate,
    std::vector<std::string>& history) {
  STree node;
  node.pos = history.back();
  auto it = certificate.find(history);
  if (it == certificate.end()) return node;
  PosId here = arena.position_id(node.pos);
  for (PosId s : arena.successors(here, it->second)) {
    history.push_back(arena.positions[s]);
    node.children.push_back(certificate_unfold(arena, certificate, history));
    history.pop_back();
  }
  std::sort(node.children.begin(), node.children.end(),
            [](const STree& a, const STree& b) { return a.pos < b.pos; });
  return node;
}

}  // namespace

// --- batteries ---------------------------------------------------------------

BatteryResult battery_pm_random(const BatteryOptions& options) {
  BatteryResult r;
  r.name = "pm-random";
  Rng rng(options.seed);
  long long members = 0;
  for (int i = 0; i < options.pm_random_cases; ++i) {
    int num_props = rand_int(rng, 1, 3);
    GameArena arena = random_arena(rng, num_props, rand_int(rng, 1, 5),
                                   rand_int(rng, 1, 2), rand_int(rng, 1, 2));
    TransitionSystem ts = arena.to_transition_system();
    AttackTree tree = random_tree(rng, num_props, 7, 3);
    Path path = random_path(rng, ts, 7);
    ++r.cases;
    bool fast = pm_check(ts, tree, path);
    bool slow = pm_oracle(ts, tree, path);
    if (fast != slow)
      record_failure(r, "case " + std::to_string(i) + ": table says " +
                            (fast ? "yes" : "no") + ", definition says " +
                            (slow ? "yes" : "no"));
    if (fast) ++members;
  }
  if (r.notes.empty())
    r.notes = std::to_string(members) + " member verdicts out of " +
              std::to_string(r.cases);
  return r;
}

BatteryResult battery_pm_exhaustive(const BatteryOptions& options) {
  BatteryResult r;
  r.name = "pm-exhaustive";
  TransitionSystem ts;
  ts.props = {"P", "Q"};
  ts.states = {"x", "y", "z"};
  ts.succ = {{0, 1}, {2}, {0, 2}};
  ts.valuation = {{true, false}, {false, false}, {true, true}};
  ts.check();

  const BooleanFormula p = BooleanFormula::atom(0);
  const BooleanFormula q = BooleanFormula::atom(1);
  auto leaf = [](const BooleanFormula& f) { return AttackTree::leaf(f); };
  auto node = [](AttackTree::Op op, std::vector<AttackTree> children) {
    return AttackTree::node(op, std::move(children));
  };
  std::vector<AttackTree> pool;
  pool.push_back(leaf(p));
  pool.push_back(leaf(q));
  pool.push_back(leaf(BooleanFormula::negation(p)));
  pool.push_back(leaf(BooleanFormula::constant(true)));
  pool.push_back(node(AttackTree::Op::Or, {leaf(p), leaf(q)}));
  pool.push_back(node(AttackTree::Op::And, {leaf(p), leaf(q)}));
  pool.push_back(node(AttackTree::Op::Sand, {leaf(p), leaf(q)}));
  pool.push_back(node(AttackTree::Op::Sand, {leaf(q), leaf(p)}));
  pool.push_back(node(AttackTree::Op::Sand, {leaf(p), leaf(q), leaf(p)}));
  pool.push_back(node(AttackTree::Op::And,
                      {node(AttackTree::Op::Sand, {leaf(p), leaf(q)}), leaf(q)}));
  pool.push_back(node(AttackTree::Op::Or,
                      {node(AttackTree::Op::Sand, {leaf(q), leaf(p)}),
                       node(AttackTree::Op::And, {leaf(p), leaf(q)})}));
  pool.push_back(node(
      AttackTree::Op::Sand,
      {node(AttackTree::Op::Or, {leaf(p), leaf(q)}),
       node(AttackTree::Op::And,
            {leaf(p), leaf(BooleanFormula::negation(q))})}));

  std::vector<Path> paths = enum_paths(ts, options.bounded_len);
  for (const AttackTree& tree : pool) {
    for (const Path& path : paths) {
      ++r.cases;
      if (pm_check(ts, tree, path) != pm_oracle(ts, tree, path))
        record_failure(r, "disagreement on tree #" +
                              std::to_string(&tree - pool.data()) + ", path " +
                              print_path(path, ts));
    }
  }
  if (r.notes.empty())
    r.notes = std::to_string(pool.size()) + " trees x " +
              std::to_string(paths.size()) + " paths";
  return r;
}

BatteryResult battery_automaton_fixtures(const BatteryOptions& options) {
  BatteryResult r;
  r.name = "automaton-fixtures";
  struct Instance {
    std::string name;
    TransitionSystem ts;
    AttackTree tree;
  };
  std::vector<Instance> instances;
  for (const auto& pair : fixtures::arena_tree_pairs()) {
    GameArena arena = parse_arena(pair.arena);
    instances.push_back({std::string(pair.arena_name) + " / " + pair.tree_name,
                         arena.to_transition_system(),
                         parse_tree(pair.tree, arena.props)});
  }
  {
    SneInstance inst = qbf_to_sne(parse_qdimacs(fixtures::kExampleQdimacs));
    instances.push_back({"qbf(example.qdimacs)",
                         inst.arena.to_transition_system(), inst.tree});
  }
  for (const Instance& inst : instances) {
    ++r.cases;
    SemanticsAutomaton dfa = build_automaton(inst.ts, inst.tree);
    Path cex;
    if (!bounded_equiv(dfa, inst.ts, inst.tree, options.bounded_len, &cex))
      record_failure(r, "contract breach on " + inst.name + " at " +
                            print_path(cex, inst.ts));
  }
  if (r.notes.empty())
    r.notes = std::to_string(r.cases) + " pairs, all words up to length " +
              std::to_string(options.bounded_len);
  return r;
}

BatteryResult battery_engine_agreement(const BatteryOptions& options) {
  BatteryResult r;
  r.name = "engine-agreement";
  Rng rng(options.seed + 1);
  long long yes = 0;
  for (int i = 0; i < options.engine_instances; ++i) {
    EngineInstance inst = random_engine_instance(rng);
    ++r.cases;
    bool a = sne_attractor(inst.arena, inst.goal, inst.from).yes;
    bool b = sne_alg1(inst.arena, inst.goal, inst.from).yes;
    SolveOptions early;
    early.alg1_early_exit = true;
    bool c = sne_alg1(inst.arena, inst.goal, inst.from, early).yes;
    if (a != b || b != c)
      record_failure(r, "case " + std::to_string(i) + ": attractor " +
                            (a ? "yes" : "no") + ", search " +
                            (b ? "yes" : "no") + ", early search " +
                            (c ? "yes" : "no"));
    if (a) ++yes;
  }
  if (r.notes.empty())
    r.notes = std::to_string(yes) + " winnable out of " + std::to_string(r.cases);
  return r;
}

BatteryResult battery_depth_bound(const BatteryOptions& options) {
  BatteryResult r;
  r.name = "depth-bound";
  Rng rng(options.seed + 1);  // same corpus as battery_engine_agreement
  for (int i = 0; i < options.engine_instances; ++i) {
    EngineInstance inst = random_engine_instance(rng);
    if (!sne_attractor(inst.arena, inst.goal, inst.from).yes) continue;
    ++r.cases;
    if (!sne_alg1(inst.arena, inst.goal, inst.from).yes)
      record_failure(r, "history bound truncated winnable case " +
                            std::to_string(i));
  }
  if (r.notes.empty())
    r.notes = std::to_string(r.cases) +
              " winnable instances; the positions x leaves bound never truncated";
  return r;
}

BatteryResult battery_reductions(const BatteryOptions& options) {
  BatteryResult r;
  r.name = "reductions";
  // Exhaustive grid: every clause pool over one or two variables (clause size
  // <= 2, zero to two clauses) under every quantifier prefix.
  for (int vars = 1; vars <= 2; ++vars) {
    std::vector<std::vector<std::vector<int>>> pools;
    pools.push_back({});
    std::vector<std::vector<int>> templates = clause_templates(vars);
    for (size_t i = 0; i < templates.size(); ++i) {
      pools.push_back({templates[i]});
      for (size_t j = i + 1; j < templates.size(); ++j)
        pools.push_back({templates[i], templates[j]});
    }
    for (const auto& clauses : pools) {
      for (int mask = 0; mask < (1 << vars); ++mask) {
        QbfInstance q;
        for (int v = 1; v <= vars; ++v)
          q.prefix.emplace_back(
              (mask >> (v - 1)) & 1 ? Quant::ForAll : Quant::Exists, v);
        q.clauses = clauses;
        check_sne_reduction(q, r);
      }
      check_pne_reduction(clauses, vars, r);
      check_sm_reduction(clauses, vars, r);
    }
  }
  // Randomized instances on top of the grid.
  Rng rng(options.seed + 2);
  for (int i = 0; i < options.reduction_random_cases; ++i)
    check_sne_reduction(random_qbf(rng, 3, 3), r);
  for (int i = 0; i < options.reduction_random_cases; ++i) {
    int vars = rand_int(rng, 1, 3);
    check_pne_reduction(random_clauses(rng, vars, 3), vars, r);
  }
  for (int i = 0; i < options.reduction_random_cases; ++i) {
    int vars = rand_int(rng, 1, 3);
    check_sm_reduction(random_clauses(rng, vars, 3), vars, r);
  }
  if (r.notes.empty())
    r.notes = std::to_string(r.cases) + " instances against the logical oracle";
  return r;
}

BatteryResult battery_properties(const BatteryOptions& options) {
  BatteryResult r;
  r.name = "properties";
  Rng rng(options.seed + 3);

  // Merge laws: the n-ary characterization equals both binary folds, the
  // operator commutes, and a single set is a fixpoint.
  for (int round = 0; round < 60; ++round) {
    GameArena arena = random_arena(rng, 2, rand_int(rng, 1, 4),
                                   rand_int(rng, 1, 2), rand_int(rng, 1, 2));
    TransitionSystem ts = arena.to_transition_system();
    std::vector<Path> all = enum_paths(ts, 4);
    auto subset = [&]() {
      PathSet s;
      for (const Path& p : all)
        if (rand_int(rng, 0, 1) == 1) s.insert(p);
      return s;
    };
    PathSet a = subset(), b = subset(), c = subset();
    ++r.cases;
    PathSet nary = merge_sets({a, b, c});
    bool ok = nary == merge_sets({merge_sets({a, b}), c}) &&
              nary == merge_sets({a, merge_sets({b, c})}) &&
              merge_sets({a, b}) == merge_sets({b, a}) &&
              merge_sets({a}) == a;
    if (!ok) record_failure(r, "merge laws, round " + std::to_string(round));
  }

  // Prepend closure: extending a member backwards along an edge keeps it a
  // member.
  for (int round = 0; round < 40; ++round) {
    GameArena arena = random_arena(rng, 2, rand_int(rng, 1, 3),
                                   rand_int(rng, 1, 2), rand_int(rng, 1, 2));
    TransitionSystem ts = arena.to_transition_system();
    AttackTree tree = random_tree(rng, 2, 6, 3);
    ++r.cases;
    bool ok = true;
    for (const Path& w : enum_paths(ts, 4)) {
      if (!pm_check(ts, tree, w)) continue;
      for (PosId x = 0; ok && x < ts.num_states(); ++x) {
        if (!ts.has_edge(x, w.states.front())) continue;
        Path ext;
        ext.states.push_back(x);
        ext.states.insert(ext.states.end(), w.states.begin(), w.states.end());
        ok = pm_check(ts, tree, ext);
      }
      if (!ok) break;
    }
    if (!ok) record_failure(r, "prepend closure, round " + std::to_string(round));
  }

  // Operator-level set equations: the path set computed from unions, merges
  // and compositions equals the set carved out by the membership test.
  for (int round = 0; round < 40; ++round) {
    GameArena arena = random_arena(rng, 2, rand_int(rng, 1, 3),
                                   rand_int(rng, 1, 2), rand_int(rng, 1, 2));
    TransitionSystem ts = arena.to_transition_system();
    AttackTree tree = random_tree(rng, 2, 6, 3);
    ++r.cases;
    std::vector<Path> all = enum_paths(ts, 5);
    if (bounded_set(ts, tree, all, 5) != enum_members(ts, tree, 5))
      record_failure(r, "set equations, round " + std::to_string(round));
  }

  // Witness round-trips: whatever a solver asserts, its certificate passes
  // the corresponding membership check.
  for (int round = 0; round < 30; ++round) {
    EngineInstance inst = random_engine_instance(rng);
    ++r.cases;
    bool ok = true;
    QueryResult sne = sne_attractor(inst.arena, inst.goal, inst.from);
    if (sne.yes) {
      ok = sne.stree_witness.has_value() &&
           check_witness(inst.arena, *sne.stree_witness, inst.goal);
      if (ok && inst.from)
        ok = sne.stree_witness->pos == inst.arena.positions[*inst.from];
    }
    TransitionSystem ts = inst.arena.to_transition_system();
    for (PneMethod method : {PneMethod::BfsProduct, PneMethod::DfsProduct}) {
      QueryResult res = pne(ts, inst.goal, inst.from, method);
      if (!ok) break;
      if (!res.yes) continue;
      ok = res.path_witness.has_value() && is_valid_path(ts, *res.path_witness) &&
           pm_check(ts, inst.goal, *res.path_witness);
      if (ok && inst.from) ok = res.path_witness->states.front() == *inst.from;
    }
    if (!ok) record_failure(r, "witness round-trip, round " + std::to_string(round));
  }

  // Prefix relation: reflexive, transitive along pruning chains,
  // antisymmetric.
  for (int round = 0; round < 30; ++round) {
    GameArena arena = random_arena(rng, 2, rand_int(rng, 2, 4),
                                   rand_int(rng, 1, 2), rand_int(rng, 1, 2));
    MemorylessStrategy strategy = random_strategy(rng, arena);
    PosId from = rand_int(rng, 0, arena.num_positions() - 1);
    STree t = unfold_strategy(arena, strategy, from, rand_int(rng, 2, 4));
    STree a = prune(rng, t);
    STree b = prune(rng, a);
    ++r.cases;
    bool ok = is_prefix(t, t) && is_prefix(a, t) && is_prefix(b, a) &&
              is_prefix(b, t);
    if (ok && is_prefix(t, a) && !(a == t)) ok = false;
    if (!ok) record_failure(r, "prefix laws, round " + std::to_string(round));
  }

  // Well-formedness certificates: every pruned unfolding is well-formed, the
  // certificate actions reproduce each node's children, and replaying the
  // certificate rebuilds the exact tree.
  for (int round = 0; round < 30; ++round) {
    GameArena arena = random_arena(rng, 2, rand_int(rng, 2, 4),
                                   rand_int(rng, 1, 2), rand_int(rng, 1, 2));
    MemorylessStrategy strategy = random_strategy(rng, arena);
    PosId from = rand_int(rng, 0, arena.num_positions() - 1);
    STree t = prune(rng, unfold_strategy(arena, strategy, from,
                                         rand_int(rng, 2, 4)));
    ++r.cases;
    WellFormedness wf = is_well_formed(arena, t);
    bool ok = wf.ok;
    std::map<std::vector<std::string>, ActId> by_history;
    for (const auto& [history, action] : wf.certificate) {
      if (!ok) break;
      by_history[history] = action;
      const STree* node = find_node(t, history);
      ok = node != nullptr;
      if (!ok) break;
      std::vector<std::string> expected;
      for (PosId s :
           arena.successors(arena.position_id(node->pos), action))
        expected.push_back(arena.positions[s]);
      std::sort(expected.begin(), expected.end());
      std::vector<std::string> actual;
      for (const STree& c : node->children) actual.push_back(c.pos);
      ok = expected == actual;
    }
    if (ok) {
      std::vector<std::string> history{t.pos};
      ok = certificate_unfold(arena, by_history, history) == t;
    }
    if (!ok) record_failure(r, "certificates, round " + std::to_string(round));
  }

  if (r.notes.empty())
    r.notes = "merge, prepend, set equations, witnesses, prefixes, certificates";
  return r;
}

std::vector<BatteryResult> run_all_batteries(const BatteryOptions& options) {
  return {battery_pm_random(options),     battery_pm_exhaustive(options),
          battery_automaton_fixtures(options), battery_engine_agreement(options),
          battery_depth_bound(options),   battery_reductions(options),
          battery_properties(options)};
}

}  // namespace atg
