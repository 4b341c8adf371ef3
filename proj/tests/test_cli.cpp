#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>

#include "atg/fixtures.hpp"
#include "atg/parse.hpp"
#include "cli_helpers.hpp"

using namespace atg;

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string museum_args(const std::string& tree) {
  return "--arena " + quoted(fixture_path("thief.arena")) + " --tree " +
         quoted(fixture_path(tree));
}

std::filesystem::path scratch_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("fixture files match the embedded texts") {
  for (const auto& entry : fixtures::all_files()) {
    INFO("fixture ", entry.name);
    CHECK(read_file(fixture_path(entry.name)) == entry.text);
  }
}

TEST_CASE("check-path verdicts and exit codes") {
  CliResult yes = run_cli("check-path " + museum_args("door1.tree") +
                          " --path \"om d1d2\"");
  CHECK(yes.exit_code == 0);
  CHECK(first_line(yes.output) == "YES");

  CliResult oracle = run_cli("check-path " + museum_args("door1.tree") +
                             " --path \"om d1d2\" --oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(split_lines(oracle.output) ==
        std::vector<std::string>{"YES", "oracle: agree"});

  CliResult no = run_cli("check-path " + museum_args("door1.tree") +
                         " --path \"om od1\"");
  CHECK(no.exit_code == 1);
  CHECK(no.output == "NO\n");

  // "om om" is no edge of the museum graph
  CliResult invalid = run_cli("check-path " + museum_args("door1.tree") +
                              " --path \"om om\"");
  CHECK(invalid.exit_code == 2);
  CHECK(invalid.output.empty());
}

TEST_CASE("pne subcommand") {
  CliResult pinned = run_cli("pne " + museum_args("door1.tree") + " --from om");
  CHECK(pinned.exit_code == 0);
  CHECK(split_lines(pinned.output) ==
        std::vector<std::string>{"YES", "om d1d2"});

  CliResult dfs = run_cli("pne " + museum_args("door1.tree") +
                          " --from om --method dfs");
  CHECK(dfs.exit_code == 0);
  CHECK(first_line(dfs.output) == "YES");

  CliResult no = run_cli("pne " + museum_args("door2.tree") + " --from d1m");
  CHECK(no.exit_code == 1);
  CHECK(no.output == "NO\n");
}

TEST_CASE("sne subcommand with witness emission") {
  CHECK(run_cli("sne " + museum_args("sand_door1.tree")).exit_code == 1);
  CHECK(run_cli("sne " + museum_args("sand_door2.tree")).exit_code == 1);

  std::filesystem::path witness = scratch_file("atg_test_witness.stree");
  std::filesystem::remove(witness);
  CliResult yes = run_cli("sne " + museum_args("or_doors.tree") +
                          " --emit-witness " + quoted(witness.string()));
  CHECK(yes.exit_code == 0);
  auto lines = split_lines(yes.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "YES");
  CHECK(lines[1] == "(om (od1 (d2d1) (d2m)) (od2 (d1d2) (d1m)))");
  CHECK(read_file(witness.string()) == lines[1] + "\n");

  CliResult sm = run_cli("sm " + museum_args("or_doors.tree") + " --stree " +
                         quoted(witness.string()));
  CHECK(sm.exit_code == 0);
  CHECK(first_line(sm.output) == "YES");
  std::filesystem::remove(witness);
}

TEST_CASE("sne cross-engine mode") {
  CliResult both = run_cli("sne " + museum_args("or_doors.tree") +
                           " --method both");
  CHECK(both.exit_code == 0);
  auto lines = split_lines(both.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "YES");
  CHECK(lines[2] == "attractor: YES");
  CHECK(lines[3] == "search: YES");

  CliResult alg1 = run_cli("sne " + museum_args("or_doors.tree") +
                           " --method alg1 --early-exit");
  CHECK(alg1.exit_code == 0);
  CHECK(alg1.output == "YES\n");

  CliResult refuse = run_cli("sne " + museum_args("or_doors.tree") +
                             " --method alg1 --emit-witness /tmp/x.stree");
  CHECK(refuse.exit_code == 2);
}

TEST_CASE("sm subcommand") {
  CliResult bad = run_cli("sm " + museum_args("door1.tree") + " --stree " +
                          quoted(fixture_path("pruned.stree")));
  CHECK(bad.exit_code == 1);
  auto lines = split_lines(bad.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "NO");
  CHECK(lines[1].find("not well-formed") != std::string::npos);

  CliResult escape = run_cli("sm " + museum_args("or_doors.tree") + " --stree " +
                             quoted(fixture_path("waiting.stree")));
  CHECK(escape.exit_code == 1);
  CHECK(split_lines(escape.output)[1].find("outside the goal") !=
        std::string::npos);

  CliResult strat = run_cli("sm " + museum_args("or_doors.tree") +
                            " --strategy " +
                            quoted(fixture_path("cross.strategy")) +
                            " --from om");
  CHECK(strat.exit_code == 0);
  CHECK(strat.output == "YES\n");

  CliResult lose = run_cli("sm " + museum_args("or_doors.tree") +
                           " --strategy " + quoted(fixture_path("wait.strategy")) +
                           " --from om");
  CHECK(lose.exit_code == 1);

  CliResult neither = run_cli("sm " + museum_args("or_doors.tree"));
  CHECK(neither.exit_code == 2);
}

TEST_CASE("usage and input errors") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("check-path --arena missing.arena --tree also.tree "
                "--path om").exit_code == 2);
  CHECK(run_cli("pne " + museum_args("door1.tree") + " --method bogus")
            .exit_code == 2);
  CHECK(run_cli("sne " + museum_args("or_doors.tree") + " --from nowhere")
            .exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("resource caps map to exit 3") {
  CliResult capped = run_cli("sne " + museum_args("or_doors.tree") + " --cap 4");
  CHECK(capped.exit_code == 3);
  CHECK(capped.output.empty());
}

TEST_CASE("reduce emits a playable game") {
  std::filesystem::path arena_out = scratch_file("atg_test_qbf.arena");
  std::filesystem::path tree_out = scratch_file("atg_test_qbf.tree");
  CliResult red = run_cli("reduce qbf --input " +
                          quoted(fixture_path("example.qdimacs")) +
                          " --out-arena " + quoted(arena_out.string()) +
                          " --out-tree " + quoted(tree_out.string()));
  CHECK(red.exit_code == 0);
  auto lines = split_lines(red.output);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "arena: 7 positions, 4 props");
  CHECK(lines[1] == "tree: 6 nodes");

  GameArena g = parse_arena(read_file(arena_out.string()));
  PosId v3 = g.position_id("v3");
  CHECK(g.valuation[v3] == std::vector<bool>{false, false, true, true});

  CliResult sne = run_cli("sne --arena " + quoted(arena_out.string()) +
                          " --tree " + quoted(tree_out.string()) +
                          " --from Start --method both");
  CHECK(sne.exit_code == 0);
  CHECK(first_line(sne.output) == "YES");

  // the bundled instance carries a universal quantifier
  CliResult sat = run_cli("reduce sat --input " +
                          quoted(fixture_path("example.qdimacs")));
  CHECK(sat.exit_code == 2);

  std::filesystem::remove(arena_out);
  std::filesystem::remove(tree_out);
}

TEST_CASE("reduce aqbf provides a strategy to check") {
  std::filesystem::path dir = std::filesystem::temp_directory_path();
  std::filesystem::path qdimacs = scratch_file("atg_test_taut.qdimacs");
  {
    FILE* f = fopen(qdimacs.string().c_str(), "w");
    REQUIRE(f);
    fputs("a 1 0\n1 -1 0\n", f);
    fclose(f);
  }
  std::filesystem::path arena_out = scratch_file("atg_test_taut.arena");
  std::filesystem::path tree_out = scratch_file("atg_test_taut.tree");
  std::filesystem::path strat_out = scratch_file("atg_test_taut.strategy");
  CliResult red = run_cli("reduce aqbf --input " + quoted(qdimacs.string()) +
                          " --out-arena " + quoted(arena_out.string()) +
                          " --out-tree " + quoted(tree_out.string()) +
                          " --out-strategy " + quoted(strat_out.string()));
  CHECK(red.exit_code == 0);

  CliResult sm = run_cli("sm --arena " + quoted(arena_out.string()) +
                         " --tree " + quoted(tree_out.string()) +
                         " --strategy " + quoted(strat_out.string()) +
                         " --from Start");
  CHECK(sm.exit_code == 0);
  CHECK(first_line(sm.output) == "YES");

  for (const auto& p : {qdimacs, arena_out, tree_out, strat_out})
    std::filesystem::remove(p);
}

TEST_CASE("dot exports") {
  CliResult arena = run_cli("dot --arena " + quoted(fixture_path("toy.arena")));
  CHECK(arena.exit_code == 0);
  CHECK(arena.output.find("digraph") != std::string::npos);
  CHECK(arena.output.find("->") != std::string::npos);

  CliResult stree =
      run_cli("dot --stree " + quoted(fixture_path("waiting.stree")));
  CHECK(stree.exit_code == 0);
  CHECK(stree.output.find("digraph") != std::string::npos);

  CliResult dfa = run_cli("dot --arena " + quoted(fixture_path("toy.arena")) +
                          " --tree " + quoted(fixture_path("toy_p.tree")));
  CHECK(dfa.exit_code == 0);
  CHECK(dfa.output.find("doublecircle") != std::string::npos);

  CHECK(run_cli("dot").exit_code == 2);
}

TEST_CASE("reports are deterministic") {
  std::string args = "sne " + museum_args("or_doors.tree") + " --method both";
  CliResult once = run_cli(args);
  CliResult twice = run_cli(args);
  CHECK(once.exit_code == twice.exit_code);
  CHECK(once.output == twice.output);
}

TEST_CASE("selftest battery smoke run") {
  CliResult r = run_cli(
      "selftest --battery pm-random --pm-cases 40 --seed 7");
  CHECK(r.exit_code == 0);
  auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("pm-random: PASS (40 cases)") == 0);
  CHECK(lines[1] == "selftest PASS");

  CliResult unknown = run_cli("selftest --battery bogus");
  CHECK(unknown.exit_code == 2);
}
