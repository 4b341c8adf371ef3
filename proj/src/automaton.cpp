#include "atg/automaton.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace atg {

int SemanticsAutomaton::run(const std::vector<PosId>& word) const {
  int q = initial;
  for (PosId x : word) {
    if (x < 0 || x >= alphabet_size) {
      throw ModelError("letter outside the automaton alphabet");
    }
    q = step(q, x);
  }
  return q;
}

bool SemanticsAutomaton::accepts(const std::vector<PosId>& word) const {
  return accepting[run(word)];
}

namespace {

struct Budget {
  std::size_t cap;
  std::size_t used = 0;

  void charge() {
    if (++used > cap) {
      throw CapacityError("automaton construction exceeded the state cap of " +
                          std::to_string(cap));
    }
  }
};

/// Lazy subset-style materialization: states are interned composite keys,
/// discovered breadth-first, so numbering is deterministic.
template <typename StepFn, typename AcceptFn>
SemanticsAutomaton materialize(int alphabet, std::vector<int> initial_key,
                               StepFn step_key, AcceptFn accept_key,
                               Budget& budget) {
  SemanticsAutomaton out;
  out.alphabet_size = alphabet;

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> keys;
  auto intern = [&](std::vector<int> key) {
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    budget.charge();
    int id = static_cast<int>(keys.size());
    ids.emplace(key, id);
    out.accepting.push_back(accept_key(key));
    keys.push_back(std::move(key));
    return id;
  };

  out.initial = intern(std::move(initial_key));
  for (int q = 0; q < static_cast<int>(keys.size()); ++q) {
    for (int x = 0; x < alphabet; ++x) {
      std::vector<int> key = keys[q];  // copy: intern() may grow `keys`
      out.step_table.push_back(intern(step_key(std::move(key), x)));
    }
  }
  return out;
}

SemanticsAutomaton build_leaf(const std::vector<bool>& sat, Budget& budget) {
  // state 1 = last letter satisfies the formula, state 0 = everything else
  // (including the empty word)
  SemanticsAutomaton d;
  d.alphabet_size = static_cast<int>(sat.size());
  d.initial = 0;
  budget.charge();
  budget.charge();
  d.accepting = {false, true};
  d.step_table.resize(2 * sat.size());
  for (size_t x = 0; x < sat.size(); ++x) {
    d.step_table[x] = sat[x] ? 1 : 0;
    d.step_table[sat.size() + x] = sat[x] ? 1 : 0;
  }
  return d;
}

SemanticsAutomaton build_union(const std::vector<SemanticsAutomaton>& parts,
                               int alphabet, Budget& budget) {
  const size_t k = parts.size();
  std::vector<int> init(k);
  for (size_t i = 0; i < k; ++i) init[i] = parts[i].initial;
  return materialize(
      alphabet, std::move(init),
      [&](std::vector<int> key, int x) {
        for (size_t i = 0; i < k; ++i) key[i] = parts[i].step(key[i], x);
        return key;
      },
      [&](const std::vector<int>& key) {
        for (size_t i = 0; i < k; ++i) {
          if (parts[i].accepting[key[i]]) return true;
        }
        return false;
      },
      budget);
}

SemanticsAutomaton build_merge(const std::vector<SemanticsAutomaton>& parts,
                               int alphabet, Budget& budget) {
  // key = child states followed by sticky bits; bit i records whether some
  // nonempty prefix read so far lies in child i's set
  const size_t k = parts.size();
  std::vector<int> init(2 * k, 0);
  for (size_t i = 0; i < k; ++i) init[i] = parts[i].initial;
  return materialize(
      alphabet, std::move(init),
      [&](std::vector<int> key, int x) {
        for (size_t i = 0; i < k; ++i) {
          key[i] = parts[i].step(key[i], x);
          if (parts[i].accepting[key[i]]) key[k + i] = 1;
        }
        return key;
      },
      [&](const std::vector<int>& key) {
        for (size_t i = 0; i < k; ++i) {
          if (!key[k + i]) return false;
        }
        for (size_t i = 0; i < k; ++i) {
          if (parts[i].accepting[key[i]]) return true;
        }
        return false;
      },
      budget);
}

SemanticsAutomaton build_concat(const SemanticsAutomaton& left,
                                const SemanticsAutomaton& right, int alphabet,
                                Budget& budget) {
  // key = left state followed by the sorted set of right states, one run per
  // junction seen so far; a junction letter is consumed by both sides
  std::vector<int> init = {left.initial};
  return materialize(
      alphabet, std::move(init),
      [&](std::vector<int> key, int x) {
        std::vector<int> next;
        next.reserve(key.size() + 1);
        next.push_back(left.step(key[0], x));
        for (size_t i = 1; i < key.size(); ++i) {
          next.push_back(right.step(key[i], x));
        }
        if (left.accepting[next[0]]) {
          next.push_back(right.step(right.initial, x));
        }
        std::sort(next.begin() + 1, next.end());
        next.erase(std::unique(next.begin() + 1, next.end()), next.end());
        return next;
      },
      [&](const std::vector<int>& key) {
        for (size_t i = 1; i < key.size(); ++i) {
          if (right.accepting[key[i]]) return true;
        }
        return false;
      },
      budget);
}

SemanticsAutomaton build_rec(const TransitionSystem& ts, const AttackTree& t,
                             Budget& budget) {
  const int alphabet = ts.num_states();
  switch (t.op) {
    case AttackTree::Op::Leaf:
      return build_leaf(sat_states(ts, t.formula), budget);
    case AttackTree::Op::Or:
    case AttackTree::Op::And: {
      std::vector<SemanticsAutomaton> parts;
      parts.reserve(t.children.size());
      for (const AttackTree& c : t.children) {
        parts.push_back(build_rec(ts, c, budget));
      }
      return t.op == AttackTree::Op::Or
                 ? build_union(parts, alphabet, budget)
                 : build_merge(parts, alphabet, budget);
    }
    case AttackTree::Op::Sand: {
      SemanticsAutomaton acc = build_rec(ts, t.children[0], budget);
      for (size_t i = 1; i < t.children.size(); ++i) {
        SemanticsAutomaton next = build_rec(ts, t.children[i], budget);
        acc = build_concat(acc, next, alphabet, budget);
      }
      return acc;
    }
  }
  throw ModelError("corrupt tree node");
}

}  // namespace

SemanticsAutomaton build_automaton(const TransitionSystem& ts,
                                   const AttackTree& tree,
                                   const AutomatonOptions& options) {
  Budget budget{options.state_cap};
  return build_rec(ts, tree, budget);
}

namespace {

bool equiv_rec(const SemanticsAutomaton& dfa, const TransitionSystem& ts,
               const AttackTree& tree, int max_len, Path& current, int state,
               Path* counterexample) {
  if (dfa.accepting[state] != pm_check(ts, tree, current)) {
    if (counterexample) *counterexample = current;
    return false;
  }
  if (current.size() < max_len) {
    for (PosId next : ts.succ[current.last()]) {
      current.states.push_back(next);
      bool ok = equiv_rec(dfa, ts, tree, max_len, current,
                          dfa.step(state, next), counterexample);
      current.states.pop_back();
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

bool bounded_equiv(const SemanticsAutomaton& dfa, const TransitionSystem& ts,
                   const AttackTree& tree, int max_len, Path* counterexample) {
  for (PosId s = 0; s < ts.num_states(); ++s) {
    Path current;
    current.states.push_back(s);
    if (!equiv_rec(dfa, ts, tree, max_len, current, dfa.step(dfa.initial, s),
                   counterexample)) {
      return false;
    }
  }
  return true;
}

}  // namespace atg
