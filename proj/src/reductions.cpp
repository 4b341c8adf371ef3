#include "atg/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace atg {

void QbfInstance::check() const {
  const int n = num_vars();
  std::vector<bool> seen(n + 1, false);
  for (auto [quant, var] : prefix) {
    (void)quant;
    if (var < 1 || var > n) {
      throw ModelError("prefix variable " + std::to_string(var) +
                       " outside 1.." + std::to_string(n));
    }
    if (seen[var]) {
      throw ModelError("variable " + std::to_string(var) + " quantified twice");
    }
    seen[var] = true;
  }
  for (const auto& clause : clauses) {
    if (clause.empty()) throw ModelError("empty clause");
    for (int lit : clause) {
      int var = std::abs(lit);
      if (lit == 0 || var > n) {
        throw ModelError("clause literal " + std::to_string(lit) +
                         " references no quantified variable");
      }
    }
  }
}

QbfInstance parse_qdimacs(const std::string& text) {
  QbfInstance q;
  std::set<int> quantified;
  int declared_vars = -1, declared_clauses = -1;
  int max_var = 0;
  bool clauses_started = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream toks(line);
    std::string first;
    if (!(toks >> first)) continue;
    if (first == "c" || first[0] == 'c') continue;

    if (first == "p") {
      std::string kind;
      if (!(toks >> kind >> declared_vars >> declared_clauses) ||
          kind != "cnf" || declared_vars < 0 || declared_clauses < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed problem line");
      }
      continue;
    }

    if (first == "e" || first == "a") {
      if (clauses_started) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": quantifier line after clauses");
      }
      Quant quant = first == "e" ? Quant::Exists : Quant::ForAll;
      int var;
      bool terminated = false;
      while (toks >> var) {
        if (var == 0) {
          terminated = true;
          break;
        }
        if (var < 0) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": negative variable in prefix");
        }
        if (!quantified.insert(var).second) {
          throw ParseError("line " + std::to_string(line_no) + ": variable " +
                           std::to_string(var) + " quantified twice");
        }
        q.prefix.emplace_back(quant, var);
        max_var = std::max(max_var, var);
      }
      if (!terminated) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": quantifier line not 0-terminated");
      }
      continue;
    }

    // clause line(s): signed integers, 0 ends a clause
    std::istringstream nums(line);
    int lit;
    std::vector<int> clause;
    while (nums >> lit) {
      if (lit == 0) {
        if (clause.empty()) {
          throw ParseError("line " + std::to_string(line_no) + ": empty clause");
        }
        q.clauses.push_back(clause);
        clause.clear();
        clauses_started = true;
      } else {
        clause.push_back(lit);
        max_var = std::max(max_var, std::abs(lit));
      }
    }
    if (nums.fail() && !nums.eof()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected an integer");
    }
    if (!clause.empty()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": clause not 0-terminated");
    }
  }

  if (declared_vars >= 0) max_var = std::max(max_var, declared_vars);
  if (declared_clauses >= 0 &&
      declared_clauses != static_cast<int>(q.clauses.size())) {
    throw ParseError("problem line declares " +
                     std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(q.clauses.size()));
  }

  // free variables become outermost existentials, in increasing order
  std::vector<std::pair<Quant, int>> free_prefix;
  for (int v = 1; v <= max_var; ++v) {
    if (!quantified.count(v)) free_prefix.emplace_back(Quant::Exists, v);
  }
  q.prefix.insert(q.prefix.begin(), free_prefix.begin(), free_prefix.end());

  try {
    q.check();
  } catch (const ModelError& e) {
    throw ParseError(e.what());
  }
  return q;
}

std::string print_qdimacs(const QbfInstance& q) {
  std::ostringstream out;
  out << "p cnf " << q.num_vars() << ' ' << q.clauses.size() << '\n';
  size_t i = 0;
  while (i < q.prefix.size()) {
    Quant quant = q.prefix[i].first;
    out << (quant == Quant::Exists ? 'e' : 'a');
    while (i < q.prefix.size() && q.prefix[i].first == quant) {
      out << ' ' << q.prefix[i].second;
      ++i;
    }
    out << " 0\n";
  }
  for (const auto& clause : q.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

bool clauses_satisfied(const std::vector<std::vector<int>>& clauses,
                       const std::vector<bool>& value) {
  for (const auto& clause : clauses) {
    bool hit = false;
    for (int lit : clause) {
      if (lit > 0 ? value[lit] : !value[-lit]) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool eval_rec(const QbfInstance& q, size_t level, std::vector<bool>& value) {
  if (level == q.prefix.size()) return clauses_satisfied(q.clauses, value);
  auto [quant, var] = q.prefix[level];
  for (bool b : {true, false}) {
    value[var] = b;
    bool sub = eval_rec(q, level + 1, value);
    if (quant == Quant::Exists && sub) return true;
    if (quant == Quant::ForAll && !sub) return false;
  }
  return quant == Quant::ForAll;
}

}  // namespace

bool qbf_eval(const QbfInstance& q, int max_vars) {
  q.check();
  if (q.num_vars() > max_vars) {
    throw CapacityError("instance has " + std::to_string(q.num_vars()) +
                        " variables, exhaustive evaluation capped at " +
                        std::to_string(max_vars));
  }
  std::vector<bool> value(q.num_vars() + 1, false);
  return eval_rec(q, 0, value);
}

SneInstance qbf_to_sne(const QbfInstance& q) {
  q.check();
  const int n = q.num_vars();
  const int k = static_cast<int>(q.clauses.size());

  SneInstance inst;
  GameArena& a = inst.arena;

  a.props.push_back("start");
  for (int c = 1; c <= k; ++c) a.props.push_back("p" + std::to_string(c));
  a.actions1 = {"True", "False"};
  a.actions2 = {"True", "False"};

  // chain: Start, then a positive and a negative position per prefix level
  a.positions.push_back("Start");
  for (auto [quant, var] : q.prefix) {
    (void)quant;
    a.positions.push_back("v" + std::to_string(var));
    a.positions.push_back("nv" + std::to_string(var));
  }

  a.valuation.assign(a.positions.size(),
                     std::vector<bool>(a.props.size(), false));
  a.valuation[0][0] = true;  // start
  for (int level = 0; level < n; ++level) {
    int var = q.prefix[level].second;
    for (int c = 0; c < k; ++c) {
      for (int lit : q.clauses[c]) {
        if (lit == var) a.valuation[1 + 2 * level][1 + c] = true;
        if (lit == -var) a.valuation[2 + 2 * level][1 + c] = true;
      }
    }
  }

  // The mover at level i is the owner of variable i+1; the other player's
  // component is ignored. Last-level positions loop to themselves.
  a.delta_table.assign(a.positions.size() * 4, 0);
  auto set_delta = [&](PosId p, ActId a1, ActId a2, PosId t) {
    a.delta_table[(static_cast<size_t>(p) * 2 + a1) * 2 + a2] = t;
  };
  auto fill_level = [&](PosId p, int next_level) {
    if (next_level >= n) {
      for (ActId a1 : {0, 1}) {
        for (ActId a2 : {0, 1}) set_delta(p, a1, a2, p);
      }
      return;
    }
    PosId pos_true = 1 + 2 * next_level;
    PosId pos_false = 2 + 2 * next_level;
    bool attacker_moves = q.prefix[next_level].first == Quant::Exists;
    for (ActId a1 : {0, 1}) {
      for (ActId a2 : {0, 1}) {
        ActId mover = attacker_moves ? a1 : a2;
        set_delta(p, a1, a2, mover == 0 ? pos_true : pos_false);
      }
    }
  };
  fill_level(0, 0);
  for (int level = 0; level < n; ++level) {
    fill_level(1 + 2 * level, level + 1);
    fill_level(2 + 2 * level, level + 1);
  }
  a.check();

  // goal: pass the start position, then complete every clause
  AttackTree clause_part;
  if (k == 0) {
    clause_part = AttackTree::leaf(BooleanFormula::constant(true));
  } else {
    std::vector<AttackTree> hits;
    for (int c = 0; c < k; ++c) {
      hits.push_back(AttackTree::leaf(BooleanFormula::atom(1 + c)));
    }
    clause_part = AttackTree::node(AttackTree::Op::And, std::move(hits));
  }
  std::vector<AttackTree> seq;
  seq.push_back(AttackTree::leaf(BooleanFormula::atom(0)));
  seq.push_back(std::move(clause_part));
  inst.tree = AttackTree::node(AttackTree::Op::Sand, std::move(seq));
  return inst;
}

PneInstance sat_to_pne(const std::vector<std::vector<int>>& clauses,
                       int num_vars) {
  QbfInstance q;
  for (int v = 1; v <= num_vars; ++v) q.prefix.emplace_back(Quant::Exists, v);
  q.clauses = clauses;
  SneInstance game = qbf_to_sne(q);
  PneInstance inst;
  inst.system = game.arena.to_transition_system();
  inst.arena = std::move(game.arena);
  inst.tree = std::move(game.tree);
  return inst;
}

SmInstance aqbf_to_sm(const std::vector<std::vector<int>>& clauses,
                      int num_vars) {
  QbfInstance q;
  for (int v = 1; v <= num_vars; ++v) q.prefix.emplace_back(Quant::ForAll, v);
  q.clauses = clauses;
  SneInstance game = qbf_to_sne(q);
  SmInstance inst;
  inst.arena = std::move(game.arena);
  inst.tree = std::move(game.tree);
  // every move is the Defender's, so any constant choice does
  inst.strategy.choice.assign(inst.arena.positions.size(), 0);
  inst.from = 0;
  return inst;
}

}  // namespace atg
