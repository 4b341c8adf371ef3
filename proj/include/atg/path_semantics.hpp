#pragma once

#include <set>
#include <vector>

#include "atg/model.hpp"

namespace atg {

using PathSet = std::set<Path>;

/// Per-state satisfaction of f under the system's valuation.
std::vector<bool> sat_states(const TransitionSystem& ts,
                             const BooleanFormula& f);

/// Sequential composition: last(p1) = first(p2) (else ModelError); the
/// junction state is written once.
Path sync_concat(const Path& p1, const Path& p2);

/// Lifted to sets: compositions of all pairs with a matching junction.
PathSet sync_concat(const PathSet& s1, const PathSet& s2);

/// Parallel merge of one or more path sets: w belongs to the result iff w
/// lies in some input set and every input set contains a prefix of w.
PathSet merge_sets(const std::vector<PathSet>& sets);

/// Table of the membership dynamic program along a fixed path. For index i,
/// start[i] is the greatest j such that the segment s_j..s_i lies in the
/// node's path set (kNone when no segment ending at i does), and best[i] is
/// the maximum of start[0..i].
struct SegmentTable {
  static constexpr int kNone = -1;
  std::vector<int> start;
  std::vector<int> best;
};

/// Root table of t along p. p must be valid in ts.
SegmentTable segment_table(const TransitionSystem& ts, const AttackTree& t,
                           const Path& p);

/// Path membership, polynomial time, via segment tables.
bool pm_check(const TransitionSystem& ts, const AttackTree& t, const Path& p);

/// Path membership straight from the inductive set definition. Exponential
/// in tree size; reference oracle for cross-checking pm_check.
bool pm_oracle(const TransitionSystem& ts, const AttackTree& t, const Path& p);

/// All valid paths with at most max_len states, in lexicographic order.
std::vector<Path> enum_paths(const TransitionSystem& ts, int max_len);

/// The members of t's path set among valid paths of length <= max_len.
PathSet enum_members(const TransitionSystem& ts, const AttackTree& t,
                     int max_len);

}  // namespace atg
