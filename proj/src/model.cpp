#include "atg/model.hpp"

#include <algorithm>

namespace atg {

int find_name(const std::vector<std::string>& names, std::string_view name) {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

int id_or_throw(const std::vector<std::string>& names, std::string_view name,
                const char* what) {
  int id = find_name(names, name);
  if (id < 0) {
    throw ModelError("unknown " + std::string(what) + " '" + std::string(name) +
                     "'");
  }
  return id;
}

}  // namespace

BooleanFormula BooleanFormula::constant(bool value) {
  BooleanFormula f;
  f.kind_ = Kind::Constant;
  f.value_ = value;
  return f;
}

BooleanFormula BooleanFormula::atom(PropId prop) {
  if (prop < 0) throw ModelError("formula atom with negative index");
  BooleanFormula f;
  f.kind_ = Kind::Atom;
  f.prop_ = prop;
  return f;
}

BooleanFormula BooleanFormula::negation(BooleanFormula arg) {
  BooleanFormula f;
  f.kind_ = Kind::Not;
  f.args_.push_back(std::move(arg));
  return f;
}

BooleanFormula BooleanFormula::conjunction(std::vector<BooleanFormula> args) {
  if (args.empty()) throw ModelError("empty conjunction");
  BooleanFormula f;
  f.kind_ = Kind::And;
  f.args_ = std::move(args);
  return f;
}

BooleanFormula BooleanFormula::disjunction(std::vector<BooleanFormula> args) {
  if (args.empty()) throw ModelError("empty disjunction");
  BooleanFormula f;
  f.kind_ = Kind::Or;
  f.args_ = std::move(args);
  return f;
}

bool BooleanFormula::eval(const std::vector<bool>& assignment) const {
  switch (kind_) {
    case Kind::Constant:
      return value_;
    case Kind::Atom:
      if (prop_ >= static_cast<int>(assignment.size())) {
        throw ModelError("formula atom outside the proposition table");
      }
      return assignment[prop_];
    case Kind::Not:
      return !args_[0].eval(assignment);
    case Kind::And:
      for (const auto& a : args_) {
        if (!a.eval(assignment)) return false;
      }
      return true;
    case Kind::Or:
      for (const auto& a : args_) {
        if (a.eval(assignment)) return true;
      }
      return false;
  }
  return false;
}

PropId BooleanFormula::max_prop() const {
  if (kind_ == Kind::Atom) return prop_;
  PropId m = -1;
  for (const auto& a : args_) m = std::max(m, a.max_prop());
  return m;
}

bool BooleanFormula::operator==(const BooleanFormula& other) const {
  return kind_ == other.kind_ && value_ == other.value_ &&
         prop_ == other.prop_ && args_ == other.args_;
}

PosId TransitionSystem::state_id(std::string_view name) const {
  return id_or_throw(states, name, "state");
}

bool TransitionSystem::has_edge(PosId from, PosId to) const {
  const auto& row = succ[from];
  return std::binary_search(row.begin(), row.end(), to);
}

void TransitionSystem::check(bool require_total) const {
  if (states.empty()) throw ModelError("transition system has no states");
  if (succ.size() != states.size() || valuation.size() != states.size()) {
    throw ModelError("transition system tables do not match the state count");
  }
  for (size_t s = 0; s < states.size(); ++s) {
    if (valuation[s].size() != props.size()) {
      throw ModelError("valuation row of state '" + states[s] +
                       "' does not match the proposition count");
    }
    if (require_total && succ[s].empty()) {
      throw ModelError("state '" + states[s] + "' has no successor");
    }
    if (!std::is_sorted(succ[s].begin(), succ[s].end())) {
      throw ModelError("successor list of '" + states[s] + "' is not sorted");
    }
    if (std::adjacent_find(succ[s].begin(), succ[s].end()) != succ[s].end()) {
      throw ModelError("duplicate successor at state '" + states[s] + "'");
    }
    for (PosId t : succ[s]) {
      if (t < 0 || t >= num_states()) {
        throw ModelError("successor of '" + states[s] + "' is out of range");
      }
    }
  }
}

PosId GameArena::position_id(std::string_view name) const {
  return id_or_throw(positions, name, "position");
}

ActId GameArena::action1_id(std::string_view name) const {
  return id_or_throw(actions1, name, "player-1 action");
}

ActId GameArena::action2_id(std::string_view name) const {
  return id_or_throw(actions2, name, "player-2 action");
}

std::vector<PosId> GameArena::successors(PosId p, ActId a1) const {
  std::vector<PosId> out;
  out.reserve(actions2.size());
  for (ActId a2 = 0; a2 < num_actions2(); ++a2) {
    out.push_back(delta(p, a1, a2));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TransitionSystem GameArena::to_transition_system() const {
  TransitionSystem ts;
  ts.props = props;
  ts.states = positions;
  ts.valuation = valuation;
  ts.succ.resize(positions.size());
  for (PosId p = 0; p < num_positions(); ++p) {
    std::vector<PosId>& row = ts.succ[p];
    for (ActId a1 = 0; a1 < num_actions1(); ++a1) {
      for (ActId a2 = 0; a2 < num_actions2(); ++a2) {
        row.push_back(delta(p, a1, a2));
      }
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return ts;
}

void GameArena::check() const {
  if (positions.empty()) throw ModelError("arena has no positions");
  if (actions1.empty() || actions2.empty()) {
    throw ModelError("both players need at least one action");
  }
  size_t cells = positions.size() * actions1.size() * actions2.size();
  if (delta_table.size() != cells) {
    throw ModelError("transition table is not total");
  }
  for (PosId target : delta_table) {
    if (target < 0 || target >= num_positions()) {
      throw ModelError("transition target out of range");
    }
  }
  if (valuation.size() != positions.size()) {
    throw ModelError("valuation does not cover every position");
  }
  for (size_t p = 0; p < positions.size(); ++p) {
    if (valuation[p].size() != props.size()) {
      throw ModelError("valuation row of position '" + positions[p] +
                       "' does not match the proposition count");
    }
  }
}

AttackTree AttackTree::leaf(BooleanFormula f) {
  AttackTree t;
  t.op = Op::Leaf;
  t.formula = std::move(f);
  return t;
}

AttackTree AttackTree::node(Op op, std::vector<AttackTree> children) {
  if (op == Op::Leaf) throw ModelError("leaf nodes carry a formula, not children");
  if (children.empty()) throw ModelError("inner tree node with no children");
  AttackTree t;
  t.op = op;
  t.children = std::move(children);
  return t;
}

int AttackTree::node_count() const {
  int n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

int AttackTree::leaf_count() const {
  if (op == Op::Leaf) return 1;
  int n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

int AttackTree::depth() const {
  int d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

PropId AttackTree::max_prop() const {
  PropId m = op == Op::Leaf ? formula.max_prop() : -1;
  for (const auto& c : children) m = std::max(m, c.max_prop());
  return m;
}

bool AttackTree::operator==(const AttackTree& other) const {
  return op == other.op && formula == other.formula &&
         children == other.children;
}

bool is_valid_path(const TransitionSystem& ts, const Path& p) {
  if (p.states.empty()) return false;
  for (PosId s : p.states) {
    if (s < 0 || s >= ts.num_states()) return false;
  }
  for (size_t i = 0; i + 1 < p.states.size(); ++i) {
    if (!ts.has_edge(p.states[i], p.states[i + 1])) return false;
  }
  return true;
}

}  // namespace atg
