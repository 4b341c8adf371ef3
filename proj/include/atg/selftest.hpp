#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace atg {

struct BatteryOptions {
  std::uint64_t seed = 20240817;
  int pm_random_cases = 1000;
  int engine_instances = 300;
  int reduction_random_cases = 200;  // per reduction
  int bounded_len = 6;               // word length for bounded sweeps
};

struct BatteryResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string notes;

  bool ok() const { return failures == 0; }
};

/// pm_check versus pm_oracle on randomized arenas, trees and paths.
BatteryResult battery_pm_random(const BatteryOptions& options);

/// pm_check versus pm_oracle on a fixed three-state system, every valid path
/// up to the bounded length, and a fixed pool of trees.
BatteryResult battery_pm_exhaustive(const BatteryOptions& options);

/// bounded_equiv on every bundled arena/tree pair plus the arena generated
/// from the bundled QBF instance.
BatteryResult battery_automaton_fixtures(const BatteryOptions& options);

/// sne_attractor versus sne_alg1 (both membership-test placements) on
/// randomized small arenas and goals.
BatteryResult battery_engine_agreement(const BatteryOptions& options);

/// On the same corpus, the alternating search with its |positions| * leaves
/// history bound must answer YES wherever the attractor engine does.
BatteryResult battery_depth_bound(const BatteryOptions& options);

/// Reduction outputs versus brute-force logical evaluation: an exhaustive
/// grid of one- and two-variable instances plus randomized instances.
BatteryResult battery_reductions(const BatteryOptions& options);

/// Algebraic and structural properties: merge laws, prepend closure,
/// operator-level set equations, witness round-trips, prefix relation laws,
/// and well-formedness certificates.
BatteryResult battery_properties(const BatteryOptions& options);

/// All batteries above, in a fixed order.
std::vector<BatteryResult> run_all_batteries(const BatteryOptions& options);

}  // namespace atg
