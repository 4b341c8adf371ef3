#pragma once

#include <string>
#include <vector>

#include "atg/automaton.hpp"
#include "atg/model.hpp"

namespace atg {

/// Graph-description (DOT) renderings. Output ordering is fixed by the
/// model's own tables, so equal inputs give byte-equal output.
std::string export_dot(const TransitionSystem& ts);
std::string export_dot(const GameArena& arena);  // merged edge relation
std::string export_dot(const STree& tree);
std::string export_dot(const SemanticsAutomaton& dfa,
                       const std::vector<std::string>& letters);

}  // namespace atg
