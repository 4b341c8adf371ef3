#include "atg/stree.hpp"

#include <algorithm>
#include <set>

namespace atg {

namespace {

std::string join(const std::vector<std::string>& h) {
  std::string out;
  for (size_t i = 0; i < h.size(); ++i) {
    if (i) out += ' ';
    out += h[i];
  }
  return out;
}

void check_shape(const STree& t) {
  for (size_t i = 0; i + 1 < t.children.size(); ++i) {
    if (!(t.children[i].pos < t.children[i + 1].pos)) {
      throw ModelError("strategic-tree children not sorted and duplicate-free");
    }
  }
  for (const STree& c : t.children) check_shape(c);
}

void collect_histories(const STree& t, std::vector<std::string>& prefix,
                       std::vector<std::vector<std::string>>& out,
                       bool leaves_only) {
  prefix.push_back(t.pos);
  if (!leaves_only || t.children.empty()) out.push_back(prefix);
  for (const STree& c : t.children) {
    collect_histories(c, prefix, out, leaves_only);
  }
  prefix.pop_back();
}

}  // namespace

STree validate_stree(const std::vector<std::vector<std::string>>& histories) {
  if (histories.empty()) throw ModelError("empty history set");
  std::set<std::vector<std::string>> set(histories.begin(), histories.end());
  for (const auto& h : set) {
    if (h.empty()) throw ModelError("empty history");
    if (h.front() != histories.front().front()) {
      throw ModelError("histories do not share a root (got '" + h.front() +
                       "' and '" + histories.front().front() + "')");
    }
    std::vector<std::string> prefix(h.begin(), h.end() - 1);
    if (!prefix.empty() && set.find(prefix) == set.end()) {
      throw ModelError("history set is not prefix-closed: missing '" +
                       join(prefix) + "'");
    }
  }

  // Insert into a trie; sorted-set iteration yields sorted children.
  STree root;
  root.pos = histories.front().front();
  for (const auto& h : set) {
    STree* node = &root;
    for (size_t i = 1; i < h.size(); ++i) {
      STree* next = nullptr;
      for (STree& c : node->children) {
        if (c.pos == h[i]) {
          next = &c;
          break;
        }
      }
      if (!next) {
        STree fresh;
        fresh.pos = h[i];
        node->children.push_back(std::move(fresh));
        next = &node->children.back();
      }
      node = next;
    }
  }
  check_shape(root);
  return root;
}

std::vector<std::vector<std::string>> stree_histories(const STree& tree) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> prefix;
  collect_histories(tree, prefix, out, false);
  return out;
}

std::vector<std::vector<std::string>> stree_leaf_histories(const STree& tree) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> prefix;
  collect_histories(tree, prefix, out, true);
  return out;
}

int stree_node_count(const STree& tree) {
  int n = 1;
  for (const STree& c : tree.children) n += stree_node_count(c);
  return n;
}

int stree_depth(const STree& tree) {
  int d = 0;
  for (const STree& c : tree.children) d = std::max(d, stree_depth(c));
  return d + 1;
}

bool is_prefix(const STree& small, const STree& big) {
  if (small.pos != big.pos) return false;
  if (small.children.empty()) return true;
  if (small.children.size() != big.children.size()) return false;
  for (size_t i = 0; i < small.children.size(); ++i) {
    if (!is_prefix(small.children[i], big.children[i])) return false;
  }
  return true;
}

namespace {

PosId pos_id_or_throw(const GameArena& arena, const std::string& name) {
  int id = find_name(arena.positions, name);
  if (id < 0) throw ModelError("unknown position '" + name + "' in tree");
  return id;
}

bool well_formed_rec(const GameArena& arena, const STree& t,
                     std::vector<std::string>& prefix, WellFormedness& out) {
  prefix.push_back(t.pos);
  PosId p = pos_id_or_throw(arena, t.pos);
  bool ok = true;
  if (!t.children.empty()) {
    std::vector<PosId> have;
    have.reserve(t.children.size());
    for (const STree& c : t.children) {
      have.push_back(pos_id_or_throw(arena, c.pos));
    }
    std::sort(have.begin(), have.end());

    ActId chosen = -1;
    for (ActId a1 = 0; a1 < arena.num_actions1() && chosen < 0; ++a1) {
      if (arena.successors(p, a1) == have) chosen = a1;
    }
    if (chosen < 0) {
      out.reason = "no action of position '" + t.pos +
                   "' yields exactly the children of node '" + join(prefix) +
                   "'";
      ok = false;
    } else {
      out.certificate.emplace_back(prefix, chosen);
      for (const STree& c : t.children) {
        if (!well_formed_rec(arena, c, prefix, out)) {
          ok = false;
          break;
        }
      }
    }
  }
  prefix.pop_back();
  return ok;
}

}  // namespace

WellFormedness is_well_formed(const GameArena& arena, const STree& tree) {
  check_shape(tree);
  WellFormedness out;
  std::vector<std::string> prefix;
  out.ok = well_formed_rec(arena, tree, prefix, out);
  if (!out.ok) out.certificate.clear();
  return out;
}

STree unfold_strategy(const GameArena& arena,
                      const MemorylessStrategy& strategy, PosId from,
                      int depth) {
  if (depth < 1) throw ModelError("unfolding depth must be at least 1");
  if (from < 0 || from >= arena.num_positions()) {
    throw ModelError("unfolding start position out of range");
  }
  if (strategy.choice.size() != arena.positions.size()) {
    throw ModelError("strategy does not cover every position");
  }
  STree node;
  node.pos = arena.positions[from];
  if (depth > 1) {
    for (PosId q : arena.successors(from, strategy.choice[from])) {
      node.children.push_back(unfold_strategy(arena, strategy, q, depth - 1));
    }
    std::sort(node.children.begin(), node.children.end(),
              [](const STree& a, const STree& b) { return a.pos < b.pos; });
  }
  return node;
}

bool check_witness(const GameArena& arena, const STree& tree,
                   const AttackTree& goal) {
  WellFormedness wf = is_well_formed(arena, tree);
  if (!wf.ok) return false;
  TransitionSystem ts = arena.to_transition_system();
  for (const auto& h : stree_leaf_histories(tree)) {
    Path p;
    p.states.reserve(h.size());
    for (const auto& name : h) p.states.push_back(ts.state_id(name));
    if (!pm_check(ts, goal, p)) return false;
  }
  return true;
}

}  // namespace atg
