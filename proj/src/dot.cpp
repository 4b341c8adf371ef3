#include "atg/dot.hpp"

#include <sstream>

namespace atg {

namespace {

void valuation_label(std::ostream& out, const std::string& name,
                     const std::vector<bool>& row,
                     const std::vector<std::string>& props) {
  out << name << "\\n{";
  bool first = true;
  for (size_t q = 0; q < props.size(); ++q) {
    if (!row[q]) continue;
    if (!first) out << ',';
    out << props[q];
    first = false;
  }
  out << '}';
}

}  // namespace

std::string export_dot(const TransitionSystem& ts) {
  std::ostringstream out;
  out << "digraph system {\n";
  for (int s = 0; s < ts.num_states(); ++s) {
    out << "  " << ts.states[s] << " [label=\"";
    valuation_label(out, ts.states[s], ts.valuation[s], ts.props);
    out << "\"];\n";
  }
  for (int s = 0; s < ts.num_states(); ++s) {
    for (PosId t : ts.succ[s]) {
      out << "  " << ts.states[s] << " -> " << ts.states[t] << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const GameArena& arena) {
  return export_dot(arena.to_transition_system());
}

namespace {

int stree_dot_rec(std::ostream& out, const STree& t, int& counter) {
  int id = counter++;
  out << "  n" << id << " [label=\"" << t.pos << "\"];\n";
  for (const STree& c : t.children) {
    int child = stree_dot_rec(out, c, counter);
    out << "  n" << id << " -> n" << child << ";\n";
  }
  return id;
}

}  // namespace

std::string export_dot(const STree& tree) {
  std::ostringstream out;
  out << "digraph strategy_tree {\n";
  int counter = 0;
  stree_dot_rec(out, tree, counter);
  out << "}\n";
  return out.str();
}

std::string export_dot(const SemanticsAutomaton& dfa,
                       const std::vector<std::string>& letters) {
  std::ostringstream out;
  out << "digraph automaton {\n";
  out << "  __init [shape=none,label=\"\"];\n";
  for (int q = 0; q < dfa.num_states(); ++q) {
    out << "  q" << q << " [shape="
        << (dfa.accepting[q] ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __init -> q" << dfa.initial << ";\n";
  for (int q = 0; q < dfa.num_states(); ++q) {
    // group parallel edges into one labeled arrow per target
    for (int target = 0; target < dfa.num_states(); ++target) {
      std::string label;
      for (int x = 0; x < dfa.alphabet_size; ++x) {
        if (dfa.step(q, x) != target) continue;
        if (!label.empty()) label += ',';
        label += letters[x];
      }
      if (!label.empty()) {
        out << "  q" << q << " -> q" << target << " [label=\"" << label
            << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace atg
