#pragma once

#include <string>
#include <vector>

#include "atg/model.hpp"

namespace atg {

/// Line-oriented arena description. '#' starts a comment. Required header
/// lines (any order, before first use): `props:`, `actions1:`, `actions2:`,
/// `positions:`. Then `label <pos> : <prop>*` lines (at most one per
/// position, missing means empty valuation) and
/// `delta <pos> <act1|*> <act2|*> -> <pos>` rows. An exact row overrides
/// wildcard rows; rows of equal specificity covering the same cell must
/// agree on the target, except that two exact rows for one cell are always
/// an error. The resulting map must be total.
GameArena parse_arena(const std::string& text);
std::string print_arena(const GameArena& arena);

/// S-expression tree syntax. Uppercase heads OR / AND / SAND build tree
/// nodes; anything else is a leaf formula built from lowercase `and`, `or`,
/// `not`, the constants `true` / `false`, and proposition names.
AttackTree parse_tree(const std::string& text,
                      const std::vector<std::string>& props);
std::string print_tree(const AttackTree& tree,
                       const std::vector<std::string>& props);

/// Whitespace-separated state names.
Path parse_path(const std::string& text, const TransitionSystem& ts);
std::string print_path(const Path& path, const TransitionSystem& ts);

/// Nested s-expression of position names: `(om (od1 (d2d1) (d2m)))`.
/// Children are canonicalized to lexicographic order; duplicate siblings are
/// rejected.
STree parse_stree(const std::string& text);
std::string print_stree(const STree& tree);

/// One line per position: `<pos> -> <action1>`. The map must be total.
MemorylessStrategy parse_strategy(const std::string& text,
                                  const GameArena& arena);
std::string print_strategy(const MemorylessStrategy& strategy,
                           const GameArena& arena);

std::string read_file(const std::string& path);   // throws ParseError
void write_file(const std::string& path, const std::string& content);

}  // namespace atg
