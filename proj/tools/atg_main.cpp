// atg: attack tree goals over two-player concurrent game arenas.
//
// Decision subcommands print YES or NO as their first line and exit with
// 0 (YES), 1 (NO), 2 (usage, parse or model error) or 3 (resource cap hit,
// or cross-checked engines disagreeing).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atg/automaton.hpp"
#include "atg/dot.hpp"
#include "atg/model.hpp"
#include "atg/parse.hpp"
#include "atg/path_semantics.hpp"
#include "atg/reductions.hpp"
#include "atg/selftest.hpp"
#include "atg/solvers.hpp"
#include "atg/stree.hpp"

using namespace atg;

namespace {

GameArena load_arena(const std::string& path) {
  return parse_arena(read_file(path));
}

AttackTree load_tree(const std::string& path, const GameArena& arena) {
  return parse_tree(read_file(path), arena.props);
}

int verdict(bool yes) {
  std::cout << (yes ? "YES" : "NO") << "\n";
  return yes ? 0 : 1;
}

const char* yes_no(bool yes) { return yes ? "YES" : "NO"; }

std::optional<PosId> parse_from(const GameArena& arena,
                                const std::string& name) {
  if (name.empty()) return std::nullopt;
  return arena.position_id(name);
}

int run_check_path(const std::string& arena_file, const std::string& tree_file,
                   const std::string& path_text, bool with_oracle) {
  GameArena arena = load_arena(arena_file);
  AttackTree tree = load_tree(tree_file, arena);
  TransitionSystem ts = arena.to_transition_system();
  Path path = parse_path(path_text, ts);
  bool fast = pm_check(ts, tree, path);
  if (with_oracle) {
    bool slow = pm_oracle(ts, tree, path);
    if (fast != slow) {
      std::cerr << "error: membership engines disagree: table says "
                << yes_no(fast) << ", definition says " << yes_no(slow) << "\n";
      return 3;
    }
  }
  int code = verdict(fast);
  if (with_oracle) std::cout << "oracle: agree\n";
  return code;
}

int run_pne(const std::string& arena_file, const std::string& tree_file,
            const std::string& from_name, const std::string& method_name,
            std::size_t cap) {
  GameArena arena = load_arena(arena_file);
  AttackTree tree = load_tree(tree_file, arena);
  TransitionSystem ts = arena.to_transition_system();
  std::optional<PosId> from = parse_from(arena, from_name);
  SolveOptions options;
  options.automaton_state_cap = cap;
  PneMethod method = method_name == "dfs" ? PneMethod::DfsProduct
                                          : PneMethod::BfsProduct;
  QueryResult res = pne(ts, tree, from, method, options);
  int code = verdict(res.yes);
  if (res.yes) std::cout << print_path(*res.path_witness, ts) << "\n";
  return code;
}

int run_sne(const std::string& arena_file, const std::string& tree_file,
            const std::string& from_name, const std::string& method_name,
            bool early_exit, const std::string& witness_file, std::size_t cap) {
  if (method_name == "alg1" && !witness_file.empty()) {
    std::cerr << "error: the alternating search produces no witness; "
                 "use --method attractor\n";
    return 2;
  }
  GameArena arena = load_arena(arena_file);
  AttackTree tree = load_tree(tree_file, arena);
  std::optional<PosId> from = parse_from(arena, from_name);
  SolveOptions options;
  options.automaton_state_cap = cap;
  options.alg1_early_exit = early_exit;

  std::optional<QueryResult> attractor;
  std::optional<QueryResult> search;
  if (method_name != "alg1") attractor = sne_attractor(arena, tree, from, options);
  if (method_name != "attractor") search = sne_alg1(arena, tree, from, options);
  if (attractor && search && attractor->yes != search->yes) {
    std::cerr << "error: engine disagreement: attractor says "
              << yes_no(attractor->yes) << ", alternating search says "
              << yes_no(search->yes) << "\n";
    return 3;
  }

  const QueryResult& res = attractor ? *attractor : *search;
  int code = verdict(res.yes);
  if (res.yes && attractor) {
    std::string text = print_stree(*attractor->stree_witness);
    std::cout << text << "\n";
    if (!witness_file.empty()) write_file(witness_file, text + "\n");
  }
  if (attractor && search) {
    std::cout << "attractor: " << yes_no(attractor->yes) << "\n";
    std::cout << "search: " << yes_no(search->yes) << "\n";
  }
  return code;
}

int run_sm(const std::string& arena_file, const std::string& tree_file,
           const std::string& stree_file, const std::string& strategy_file,
           const std::string& from_name, std::size_t cap) {
  GameArena arena = load_arena(arena_file);
  AttackTree tree = load_tree(tree_file, arena);
  if (!stree_file.empty()) {
    STree stree = parse_stree(read_file(stree_file));
    QueryResult res = sm_explicit(arena, tree, stree);
    int code = verdict(res.yes);
    if (!res.yes) {
      WellFormedness wf = is_well_formed(arena, stree);
      if (!wf.ok) {
        std::cout << "reason: not well-formed: " << wf.reason << "\n";
      } else {
        TransitionSystem ts = arena.to_transition_system();
        for (const auto& history : stree_leaf_histories(stree)) {
          Path path;
          for (const auto& name : history)
            path.states.push_back(ts.state_id(name));
          if (pm_check(ts, tree, path)) continue;
          std::cout << "reason: leaf history '" << print_path(path, ts)
                    << "' is outside the goal's path set\n";
          break;
        }
      }
    }
    return code;
  }
  MemorylessStrategy strategy = parse_strategy(read_file(strategy_file), arena);
  SolveOptions options;
  options.automaton_state_cap = cap;
  QueryResult res =
      sm_memoryless(arena, tree, strategy, arena.position_id(from_name), options);
  return verdict(res.yes);
}

int run_reduce(const std::string& mode, const std::string& input_file,
               const std::string& out_arena, const std::string& out_tree,
               const std::string& out_strategy) {
  QbfInstance q = parse_qdimacs(read_file(input_file));
  GameArena arena;
  AttackTree tree;
  MemorylessStrategy strategy;
  bool with_strategy = false;
  if (mode == "qbf") {
    SneInstance inst = qbf_to_sne(q);
    arena = std::move(inst.arena);
    tree = std::move(inst.tree);
  } else if (mode == "sat") {
    for (const auto& [quant, var] : q.prefix) {
      if (quant != Quant::ForAll) continue;
      std::cerr << "error: universal quantifier on variable "
                << std::to_string(var) << " in satisfiability input\n";
      return 2;
    }
    PneInstance inst = sat_to_pne(q.clauses, q.num_vars());
    arena = std::move(inst.arena);
    tree = std::move(inst.tree);
  } else {  // aqbf
    for (const auto& [quant, var] : q.prefix) {
      if (quant != Quant::Exists) continue;
      std::cerr << "error: variable " << std::to_string(var)
                << " is not universally quantified in aqbf input\n";
      return 2;
    }
    SmInstance inst = aqbf_to_sm(q.clauses, q.num_vars());
    arena = std::move(inst.arena);
    tree = std::move(inst.tree);
    strategy = std::move(inst.strategy);
    with_strategy = true;
  }
  std::cout << "arena: " << arena.num_positions() << " positions, "
            << arena.num_props() << " props\n";
  std::cout << "tree: " << tree.node_count() << " nodes\n";
  if (with_strategy) std::cout << "from: " << arena.positions[0] << "\n";
  if (!out_arena.empty()) {
    write_file(out_arena, print_arena(arena));
    std::cout << "wrote " << out_arena << "\n";
  }
  if (!out_tree.empty()) {
    write_file(out_tree, print_tree(tree, arena.props) + "\n");
    std::cout << "wrote " << out_tree << "\n";
  }
  if (with_strategy && !out_strategy.empty()) {
    write_file(out_strategy, print_strategy(strategy, arena));
    std::cout << "wrote " << out_strategy << "\n";
  }
  return 0;
}

int run_dot(const std::string& arena_file, const std::string& tree_file,
            const std::string& stree_file, std::size_t cap) {
  if (!stree_file.empty() && arena_file.empty() && tree_file.empty()) {
    std::cout << export_dot(parse_stree(read_file(stree_file)));
    return 0;
  }
  if (!arena_file.empty() && stree_file.empty()) {
    GameArena arena = load_arena(arena_file);
    if (tree_file.empty()) {
      std::cout << export_dot(arena);
      return 0;
    }
    TransitionSystem ts = arena.to_transition_system();
    AutomatonOptions options;
    options.state_cap = cap;
    SemanticsAutomaton dfa =
        build_automaton(ts, load_tree(tree_file, arena), options);
    std::cout << export_dot(dfa, ts.states);
    return 0;
  }
  std::cerr << "error: dot needs --arena, --arena with --tree, or --stree\n";
  return 2;
}

int run_selftest(const BatteryOptions& options, const std::string& only) {
  std::vector<BatteryResult> results;
  if (only.empty()) {
    results = run_all_batteries(options);
  } else if (only == "pm-random") {
    results.push_back(battery_pm_random(options));
  } else if (only == "pm-exhaustive") {
    results.push_back(battery_pm_exhaustive(options));
  } else if (only == "automaton-fixtures") {
    results.push_back(battery_automaton_fixtures(options));
  } else if (only == "engine-agreement") {
    results.push_back(battery_engine_agreement(options));
  } else if (only == "depth-bound") {
    results.push_back(battery_depth_bound(options));
  } else if (only == "reductions") {
    results.push_back(battery_reductions(options));
  } else if (only == "properties") {
    results.push_back(battery_properties(options));
  } else {
    std::cerr << "error: unknown battery '" << only << "'\n";
    return 2;
  }
  bool all_ok = true;
  for (const BatteryResult& r : results) {
    all_ok = all_ok && r.ok();
    std::cout << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " ("
              << r.cases << " cases";
    if (!r.ok()) std::cout << ", " << r.failures << " failures";
    std::cout << ")";
    if (!r.notes.empty()) std::cout << " -- " << r.notes;
    std::cout << "\n";
  }
  std::cout << "selftest " << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attack tree goals over two-player game arenas"};
  app.require_subcommand(1);

  std::string arena_file, tree_file, stree_file, strategy_file, witness_file;
  std::string path_text, from_name, input_file;
  std::string out_arena, out_tree, out_strategy;
  std::string method, reduce_mode, battery;
  bool with_oracle = false, early_exit = false;
  std::size_t cap = 1000000;
  BatteryOptions battery_options;

  CLI::App* check_path = app.add_subcommand(
      "check-path", "Is the given path a member of the goal's path set?");
  check_path->add_option("--arena", arena_file)->required();
  check_path->add_option("--tree", tree_file)->required();
  check_path->add_option("--path", path_text, "whitespace-separated positions")
      ->required();
  check_path->add_flag("--oracle", with_oracle,
                       "cross-check against the definitional evaluator");

  CLI::App* pne_cmd = app.add_subcommand(
      "pne", "Does the goal's path set contain any valid path?");
  pne_cmd->add_option("--arena", arena_file)->required();
  pne_cmd->add_option("--tree", tree_file)->required();
  pne_cmd->add_option("--from", from_name, "pin the first position");
  pne_cmd->add_option("--method", method)
      ->default_val("dfa")
      ->check(CLI::IsMember({"dfa", "dfs"}));
  pne_cmd->add_option("--cap", cap, "automaton state budget");

  CLI::App* sne_cmd = app.add_subcommand(
      "sne", "Does the Attacker have a winning strategy for the goal?");
  sne_cmd->add_option("--arena", arena_file)->required();
  sne_cmd->add_option("--tree", tree_file)->required();
  sne_cmd->add_option("--from", from_name, "pin the starting position");
  sne_cmd->add_option("--method", method)
      ->default_val("attractor")
      ->check(CLI::IsMember({"attractor", "alg1", "both"}));
  sne_cmd->add_flag("--early-exit", early_exit,
                    "alternating search tests membership at node entry");
  sne_cmd->add_option("--emit-witness", witness_file,
                      "write the witness tree to this file");
  sne_cmd->add_option("--cap", cap, "automaton state budget");

  CLI::App* sm_cmd = app.add_subcommand(
      "sm", "Is the given tree (or positional strategy) a witness?");
  sm_cmd->add_option("--arena", arena_file)->required();
  sm_cmd->add_option("--tree", tree_file)->required();
  CLI::Option* stree_opt = sm_cmd->add_option("--stree", stree_file);
  CLI::Option* strategy_opt = sm_cmd->add_option("--strategy", strategy_file);
  CLI::Option* from_opt = sm_cmd->add_option("--from", from_name);
  stree_opt->excludes(strategy_opt);
  strategy_opt->needs(from_opt);
  sm_cmd->add_option("--cap", cap, "automaton state budget");

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "Turn a QBF / SAT instance into a game");
  reduce_cmd->add_option("mode", reduce_mode)
      ->required()
      ->check(CLI::IsMember({"qbf", "sat", "aqbf"}));
  reduce_cmd->add_option("--input", input_file, "QDIMACS file")->required();
  reduce_cmd->add_option("--out-arena", out_arena);
  reduce_cmd->add_option("--out-tree", out_tree);
  reduce_cmd->add_option("--out-strategy", out_strategy);

  CLI::App* dot_cmd =
      app.add_subcommand("dot", "Graphviz export of models and witnesses");
  dot_cmd->add_option("--arena", arena_file);
  dot_cmd->add_option("--tree", tree_file,
                      "with --arena: export the goal's automaton");
  dot_cmd->add_option("--stree", stree_file);
  dot_cmd->add_option("--cap", cap, "automaton state budget");

  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "Randomized and exhaustive cross-validation batteries");
  selftest_cmd->add_option("--seed", battery_options.seed);
  selftest_cmd->add_option("--pm-cases", battery_options.pm_random_cases);
  selftest_cmd->add_option("--engine-cases", battery_options.engine_instances);
  selftest_cmd->add_option("--reduction-cases",
                           battery_options.reduction_random_cases);
  selftest_cmd->add_option("--max-len", battery_options.bounded_len);
  selftest_cmd->add_option("--battery", battery, "run a single battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check_path)
      return run_check_path(arena_file, tree_file, path_text, with_oracle);
    if (*pne_cmd) return run_pne(arena_file, tree_file, from_name, method, cap);
    if (*sne_cmd)
      return run_sne(arena_file, tree_file, from_name, method, early_exit,
                     witness_file, cap);
    if (*sm_cmd) {
      if (stree_file.empty() && strategy_file.empty()) {
        std::cerr << "error: sm needs --stree or --strategy with --from\n";
        return 2;
      }
      return run_sm(arena_file, tree_file, stree_file, strategy_file, from_name,
                    cap);
    }
    if (*reduce_cmd)
      return run_reduce(reduce_mode, input_file, out_arena, out_tree,
                        out_strategy);
    if (*dot_cmd) return run_dot(arena_file, tree_file, stree_file, cap);
    if (*selftest_cmd) return run_selftest(battery_options, battery);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
