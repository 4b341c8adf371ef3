#pragma once

#include <vector>

namespace atg::fixtures {

// Texts of the bundled example files, byte-identical to fixtures/ in the
// source tree (a test checks that they stay in sync).
extern const char* const kThiefArena;
extern const char* const kToyArena;
extern const char* const kDoor1Tree;
extern const char* const kDoor2Tree;
extern const char* const kSandDoor1Tree;
extern const char* const kSandDoor2Tree;
extern const char* const kOrDoorsTree;
extern const char* const kHeistTree;
extern const char* const kToyPTree;
extern const char* const kToySandQpTree;
extern const char* const kToyAndPqTree;
extern const char* const kWaitingStree;
extern const char* const kWaitingPrefixStree;
extern const char* const kPrunedStree;
extern const char* const kCrossStrategy;
extern const char* const kWaitStrategy;
extern const char* const kExampleQdimacs;

struct NamedText {
  const char* name;
  const char* text;
};

/// Every bundled file, keyed by its file name.
const std::vector<NamedText>& all_files();

struct ArenaTreePair {
  const char* arena_name;
  const char* arena;
  const char* tree_name;
  const char* tree;
};

/// Arena and tree combinations exercised by the bounded automaton checks.
const std::vector<ArenaTreePair>& arena_tree_pairs();

}  // namespace atg::fixtures
