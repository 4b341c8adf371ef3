#include "atg/path_semantics.hpp"

#include <algorithm>

namespace atg {

std::vector<bool> sat_states(const TransitionSystem& ts,
                             const BooleanFormula& f) {
  std::vector<bool> sat(ts.num_states());
  for (int s = 0; s < ts.num_states(); ++s) {
    sat[s] = f.eval(ts.valuation[s]);
  }
  return sat;
}

Path sync_concat(const Path& p1, const Path& p2) {
  if (p1.states.empty() || p2.states.empty()) {
    throw ModelError("cannot compose an empty path");
  }
  if (p1.last() != p2.states.front()) {
    throw ModelError("junction mismatch in path composition");
  }
  Path out = p1;
  out.states.insert(out.states.end(), p2.states.begin() + 1, p2.states.end());
  return out;
}

PathSet sync_concat(const PathSet& s1, const PathSet& s2) {
  PathSet out;
  for (const Path& p1 : s1) {
    for (const Path& p2 : s2) {
      if (p1.last() == p2.states.front()) {
        out.insert(sync_concat(p1, p2));
      }
    }
  }
  return out;
}

namespace {

bool has_prefix_in(const PathSet& set, const Path& w) {
  for (const Path& q : set) {
    if (q.states.size() <= w.states.size() &&
        std::equal(q.states.begin(), q.states.end(), w.states.begin())) {
      return true;
    }
  }
  return false;
}

}  // namespace

PathSet merge_sets(const std::vector<PathSet>& sets) {
  if (sets.empty()) throw ModelError("merge of zero path sets");
  PathSet out;
  for (const PathSet& candidates : sets) {
    for (const Path& w : candidates) {
      bool ok = true;
      for (const PathSet& s : sets) {
        if (!has_prefix_in(s, w)) {
          ok = false;
          break;
        }
      }
      if (ok) out.insert(w);
    }
  }
  return out;
}

namespace {

constexpr int kNone = SegmentTable::kNone;

void fill_best(SegmentTable& t) {
  t.best.resize(t.start.size());
  int best = kNone;
  for (size_t i = 0; i < t.start.size(); ++i) {
    best = std::max(best, t.start[i]);
    t.best[i] = best;
  }
}

// Recurrences exploit prepend closure: for every node, the valid segment
// starts ending at i form a prefix interval [0 .. start[i]].
SegmentTable build_table(const TransitionSystem& ts, const AttackTree& t,
                         const Path& p) {
  const int m = p.size();
  SegmentTable tab;
  tab.start.assign(m, kNone);

  switch (t.op) {
    case AttackTree::Op::Leaf: {
      std::vector<bool> sat = sat_states(ts, t.formula);
      for (int i = 0; i < m; ++i) {
        tab.start[i] = sat[p.states[i]] ? i : kNone;
      }
      break;
    }
    case AttackTree::Op::Or: {
      for (const AttackTree& c : t.children) {
        SegmentTable ct = build_table(ts, c, p);
        for (int i = 0; i < m; ++i) {
          tab.start[i] = std::max(tab.start[i], ct.start[i]);
        }
      }
      break;
    }
    case AttackTree::Op::Sand: {
      SegmentTable acc = build_table(ts, t.children[0], p);
      fill_best(acc);
      for (size_t k = 1; k < t.children.size(); ++k) {
        SegmentTable ct = build_table(ts, t.children[k], p);
        SegmentTable next;
        next.start.assign(m, kNone);
        for (int i = 0; i < m; ++i) {
          // latest start of a child-k segment ending at i, then the best
          // accumulated start reaching that junction
          if (ct.start[i] != kNone) next.start[i] = acc.best[ct.start[i]];
        }
        fill_best(next);
        acc = std::move(next);
      }
      tab.start = std::move(acc.start);
      break;
    }
    case AttackTree::Op::And: {
      std::vector<int> completed(m, kNone);  // max_k start_k[i]
      std::vector<int> prefixed(m, m);       // min_k best_k[i]
      for (const AttackTree& c : t.children) {
        SegmentTable ct = build_table(ts, c, p);
        fill_best(ct);
        for (int i = 0; i < m; ++i) {
          completed[i] = std::max(completed[i], ct.start[i]);
          prefixed[i] = std::min(prefixed[i], ct.best[i]);
        }
      }
      for (int i = 0; i < m; ++i) {
        tab.start[i] = std::min(completed[i], prefixed[i]);
      }
      break;
    }
  }
  fill_best(tab);
  return tab;
}

void require_valid(const TransitionSystem& ts, const Path& p) {
  if (!is_valid_path(ts, p)) throw ModelError("path is not valid in the system");
}

}  // namespace

SegmentTable segment_table(const TransitionSystem& ts, const AttackTree& t,
                           const Path& p) {
  require_valid(ts, p);
  return build_table(ts, t, p);
}

bool pm_check(const TransitionSystem& ts, const AttackTree& t, const Path& p) {
  require_valid(ts, p);
  SegmentTable tab = build_table(ts, t, p);
  return tab.start[p.size() - 1] != kNone;
}

namespace {

bool seg_in(const TransitionSystem& ts, const AttackTree& t, const Path& p,
            int a, int b, std::vector<std::vector<bool>>& sat_cache,
            const std::vector<const BooleanFormula*>& leaf_formulas);

// some split a = j0 <= j1 <= ... <= jn = b with consecutive child segments
bool sand_split(const TransitionSystem& ts, const AttackTree& t, const Path& p,
                size_t child, int a, int b,
                std::vector<std::vector<bool>>& sat_cache,
                const std::vector<const BooleanFormula*>& leaf_formulas) {
  if (child + 1 == t.children.size()) {
    return seg_in(ts, t.children[child], p, a, b, sat_cache, leaf_formulas);
  }
  for (int j = a; j <= b; ++j) {
    if (seg_in(ts, t.children[child], p, a, j, sat_cache, leaf_formulas) &&
        sand_split(ts, t, p, child + 1, j, b, sat_cache, leaf_formulas)) {
      return true;
    }
  }
  return false;
}

bool seg_in(const TransitionSystem& ts, const AttackTree& t, const Path& p,
            int a, int b, std::vector<std::vector<bool>>& sat_cache,
            const std::vector<const BooleanFormula*>& leaf_formulas) {
  switch (t.op) {
    case AttackTree::Op::Leaf: {
      size_t idx = 0;
      while (leaf_formulas[idx] != &t.formula) ++idx;
      if (sat_cache[idx].empty()) {
        sat_cache[idx] = sat_states(ts, t.formula);
      }
      return sat_cache[idx][p.states[b]];
    }
    case AttackTree::Op::Or:
      for (const AttackTree& c : t.children) {
        if (seg_in(ts, c, p, a, b, sat_cache, leaf_formulas)) return true;
      }
      return false;
    case AttackTree::Op::Sand:
      return sand_split(ts, t, p, 0, a, b, sat_cache, leaf_formulas);
    case AttackTree::Op::And: {
      bool whole = false;
      for (const AttackTree& c : t.children) {
        if (seg_in(ts, c, p, a, b, sat_cache, leaf_formulas)) {
          whole = true;
          break;
        }
      }
      if (!whole) return false;
      for (const AttackTree& c : t.children) {
        bool prefix = false;
        for (int l = a; l <= b; ++l) {
          if (seg_in(ts, c, p, a, l, sat_cache, leaf_formulas)) {
            prefix = true;
            break;
          }
        }
        if (!prefix) return false;
      }
      return true;
    }
  }
  return false;
}

void collect_leaves(const AttackTree& t,
                    std::vector<const BooleanFormula*>& out) {
  if (t.op == AttackTree::Op::Leaf) {
    out.push_back(&t.formula);
    return;
  }
  for (const AttackTree& c : t.children) collect_leaves(c, out);
}

}  // namespace

bool pm_oracle(const TransitionSystem& ts, const AttackTree& t, const Path& p) {
  require_valid(ts, p);
  std::vector<const BooleanFormula*> leaf_formulas;
  collect_leaves(t, leaf_formulas);
  std::vector<std::vector<bool>> sat_cache(leaf_formulas.size());
  return seg_in(ts, t, p, 0, p.size() - 1, sat_cache, leaf_formulas);
}

std::vector<Path> enum_paths(const TransitionSystem& ts, int max_len) {
  std::vector<Path> out;
  std::vector<PosId> current;
  auto rec = [&](auto&& self, PosId s) -> void {
    current.push_back(s);
    Path p;
    p.states = current;
    out.push_back(std::move(p));
    if (static_cast<int>(current.size()) < max_len) {
      for (PosId t : ts.succ[s]) self(self, t);
    }
    current.pop_back();
  };
  for (PosId s = 0; s < ts.num_states(); ++s) rec(rec, s);
  return out;
}

PathSet enum_members(const TransitionSystem& ts, const AttackTree& t,
                     int max_len) {
  PathSet out;
  for (const Path& p : enum_paths(ts, max_len)) {
    if (pm_check(ts, t, p)) out.insert(p);
  }
  return out;
}

}  // namespace atg
