#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace atg {

using PropId = int;
using PosId = int;
using ActId = int;

/// Malformed input text (arena / tree / s-tree / strategy / QBF files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structural invariant does not hold (non-total delta, invalid path,
/// broken prefix closure, ...).
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bounded construction (automaton build, QBF evaluation) exceeded its cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Player { Attacker, Defender };

/// Index of `name` in `names`, or -1 when absent.
int find_name(const std::vector<std::string>& names, std::string_view name);

/// Propositional formula over an interned proposition set. Atoms are indices
/// into the owning model's proposition table.
class BooleanFormula {
 public:
  enum class Kind { Constant, Atom, Not, And, Or };

  BooleanFormula() : kind_(Kind::Constant), value_(false) {}

  static BooleanFormula constant(bool value);
  static BooleanFormula atom(PropId prop);
  static BooleanFormula negation(BooleanFormula arg);
  static BooleanFormula conjunction(std::vector<BooleanFormula> args);
  static BooleanFormula disjunction(std::vector<BooleanFormula> args);

  Kind kind() const { return kind_; }
  bool value() const { return value_; }
  PropId prop() const { return prop_; }
  const std::vector<BooleanFormula>& args() const { return args_; }

  /// Classic propositional evaluation; `assignment[p]` says whether
  /// proposition p holds.
  bool eval(const std::vector<bool>& assignment) const;

  /// Largest atom index appearing in the formula, -1 for closed formulas.
  PropId max_prop() const;

  bool operator==(const BooleanFormula& other) const;

 private:
  Kind kind_;
  bool value_ = false;
  PropId prop_ = -1;
  std::vector<BooleanFormula> args_;
};

/// Unlabeled transition system: states, edge relation, valuation.
struct TransitionSystem {
  std::vector<std::string> props;
  std::vector<std::string> states;
  std::vector<std::vector<PosId>> succ;      // sorted, duplicate-free
  std::vector<std::vector<bool>> valuation;  // [state][prop]

  int num_states() const { return static_cast<int>(states.size()); }
  int num_props() const { return static_cast<int>(props.size()); }

  PosId state_id(std::string_view name) const;  // throws ModelError
  bool has_edge(PosId from, PosId to) const;

  /// Structural validation; throws ModelError. `require_total` additionally
  /// demands at least one successor per state (holds for arena-derived
  /// systems).
  void check(bool require_total = false) const;
};

/// Two-player concurrent game arena: total transition map over joint actions
/// plus a propositional valuation. Player 1 is the Attacker, player 2 the
/// Defender.
struct GameArena {
  std::vector<std::string> props;
  std::vector<std::string> positions;
  std::vector<std::string> actions1;  // Attacker
  std::vector<std::string> actions2;  // Defender
  // delta_table[(p * |actions1| + a1) * |actions2| + a2] = successor position
  std::vector<PosId> delta_table;
  std::vector<std::vector<bool>> valuation;  // [position][prop]

  int num_positions() const { return static_cast<int>(positions.size()); }
  int num_props() const { return static_cast<int>(props.size()); }
  int num_actions1() const { return static_cast<int>(actions1.size()); }
  int num_actions2() const { return static_cast<int>(actions2.size()); }

  PosId delta(PosId p, ActId a1, ActId a2) const {
    return delta_table[(static_cast<size_t>(p) * actions1.size() + a1) *
                           actions2.size() +
                       a2];
  }

  PosId position_id(std::string_view name) const;  // throws ModelError
  ActId action1_id(std::string_view name) const;   // throws ModelError
  ActId action2_id(std::string_view name) const;   // throws ModelError

  /// Distinct successor positions of p when the Attacker commits to a1
  /// (sorted).
  std::vector<PosId> successors(PosId p, ActId a1) const;

  /// Merge the two players into one: states = positions, (p,p') is an edge
  /// iff some joint action maps p to p'.
  TransitionSystem to_transition_system() const;

  /// Structural validation (totality, table sizes); throws ModelError.
  void check() const;
};

/// Attack tree: a leaf holds one Boolean formula, an inner node one of
/// OR / AND / SAND over at least one child.
struct AttackTree {
  enum class Op { Leaf, Or, And, Sand };

  Op op = Op::Leaf;
  BooleanFormula formula;            // leaves only
  std::vector<AttackTree> children;  // inner nodes only, nonempty

  static AttackTree leaf(BooleanFormula f);
  static AttackTree node(Op op, std::vector<AttackTree> children);

  int node_count() const;  // |T|
  int leaf_count() const;  // n
  int depth() const;
  PropId max_prop() const;

  bool operator==(const AttackTree& other) const;
};

/// Finite nonempty state sequence.
struct Path {
  std::vector<PosId> states;

  int size() const { return static_cast<int>(states.size()); }
  PosId last() const { return states.back(); }

  auto operator<=>(const Path&) const = default;
};

/// Every consecutive pair connected by an edge of ts, and nonempty.
bool is_valid_path(const TransitionSystem& ts, const Path& p);

/// Positional (memoryless) strategy: one Attacker action per position.
struct MemorylessStrategy {
  std::vector<ActId> choice;  // indexed by PosId
  Player owner = Player::Attacker;
};

/// Strategic tree. A node stands for the history spelled by its root-to-node
/// position sequence; children are kept sorted by position name and are
/// duplicate-free.
struct STree {
  std::string pos;
  std::vector<STree> children;

  bool operator==(const STree& other) const = default;
};

struct SolveStats {
  long long nodes = 0;       // search/product states touched
  long long iterations = 0;  // fixpoint rounds or recursive calls
  long long automaton_states = 0;
};

struct QueryResult {
  bool yes = false;
  std::optional<Path> path_witness;
  std::optional<STree> stree_witness;
  SolveStats stats;
};

}  // namespace atg
