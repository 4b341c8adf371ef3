#include "atg/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace atg {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(const std::string& s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

void require_identifier(const std::string& s, const char* what, int line) {
  if (!is_identifier(s)) {
    throw ParseError("line " + std::to_string(line) + ": bad " +
                     std::string(what) + " name '" + s + "'");
  }
}

std::string strip_comment(const std::string& line) {
  size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

const char* const kFormulaReserved[] = {"and", "or",   "not",  "true",
                                        "false", "AND", "OR", "SAND"};

bool is_reserved_prop(const std::string& s) {
  for (const char* r : kFormulaReserved) {
    if (s == r) return true;
  }
  return false;
}

// --- s-expression reader -------------------------------------------------

struct Sexp {
  bool is_symbol = false;
  std::string symbol;
  std::vector<Sexp> items;
};

std::vector<std::string> tokenize_sexp(const std::string& text) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      toks.emplace_back(1, c);
      ++i;
    } else {
      size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != '(' && text[j] != ')' && text[j] != '#') {
        ++j;
      }
      toks.push_back(text.substr(i, j - i));
      i = j;
    }
  }
  return toks;
}

Sexp parse_sexp(const std::vector<std::string>& toks, size_t& pos) {
  if (pos >= toks.size()) throw ParseError("unexpected end of expression");
  const std::string& tok = toks[pos];
  if (tok == ")") throw ParseError("unexpected ')'");
  if (tok == "(") {
    ++pos;
    Sexp list;
    while (true) {
      if (pos >= toks.size()) throw ParseError("missing ')'");
      if (toks[pos] == ")") {
        ++pos;
        return list;
      }
      list.items.push_back(parse_sexp(toks, pos));
    }
  }
  Sexp sym;
  sym.is_symbol = true;
  sym.symbol = tok;
  ++pos;
  return sym;
}

Sexp parse_single_sexp(const std::string& text, const char* what) {
  std::vector<std::string> toks = tokenize_sexp(text);
  if (toks.empty()) throw ParseError(std::string("empty ") + what);
  size_t pos = 0;
  Sexp e = parse_sexp(toks, pos);
  if (pos != toks.size()) {
    throw ParseError(std::string("trailing content after ") + what);
  }
  return e;
}

// --- formulas and trees ---------------------------------------------------

BooleanFormula formula_from_sexp(const Sexp& e,
                                 const std::vector<std::string>& props) {
  if (e.is_symbol) {
    if (e.symbol == "true") return BooleanFormula::constant(true);
    if (e.symbol == "false") return BooleanFormula::constant(false);
    int p = find_name(props, e.symbol);
    if (p < 0) throw ParseError("unknown proposition '" + e.symbol + "'");
    return BooleanFormula::atom(p);
  }
  if (e.items.empty() || !e.items[0].is_symbol) {
    throw ParseError("formula list needs a connective head");
  }
  const std::string& head = e.items[0].symbol;
  std::vector<BooleanFormula> args;
  for (size_t i = 1; i < e.items.size(); ++i) {
    args.push_back(formula_from_sexp(e.items[i], props));
  }
  if (head == "not") {
    if (args.size() != 1) throw ParseError("'not' takes exactly one argument");
    return BooleanFormula::negation(std::move(args[0]));
  }
  if (head == "and") {
    if (args.empty()) throw ParseError("'and' needs at least one argument");
    return BooleanFormula::conjunction(std::move(args));
  }
  if (head == "or") {
    if (args.empty()) throw ParseError("'or' needs at least one argument");
    return BooleanFormula::disjunction(std::move(args));
  }
  throw ParseError("unknown formula connective '" + head + "'");
}

AttackTree tree_from_sexp(const Sexp& e,
                          const std::vector<std::string>& props) {
  if (!e.is_symbol && !e.items.empty() && e.items[0].is_symbol) {
    const std::string& head = e.items[0].symbol;
    AttackTree::Op op;
    if (head == "OR") {
      op = AttackTree::Op::Or;
    } else if (head == "AND") {
      op = AttackTree::Op::And;
    } else if (head == "SAND") {
      op = AttackTree::Op::Sand;
    } else {
      return AttackTree::leaf(formula_from_sexp(e, props));
    }
    if (e.items.size() < 2) {
      throw ParseError("'" + head + "' needs at least one child");
    }
    std::vector<AttackTree> children;
    for (size_t i = 1; i < e.items.size(); ++i) {
      children.push_back(tree_from_sexp(e.items[i], props));
    }
    return AttackTree::node(op, std::move(children));
  }
  return AttackTree::leaf(formula_from_sexp(e, props));
}

void print_formula(std::ostream& out, const BooleanFormula& f,
                   const std::vector<std::string>& props) {
  switch (f.kind()) {
    case BooleanFormula::Kind::Constant:
      out << (f.value() ? "true" : "false");
      return;
    case BooleanFormula::Kind::Atom:
      out << props.at(f.prop());
      return;
    case BooleanFormula::Kind::Not:
      out << "(not ";
      print_formula(out, f.args()[0], props);
      out << ')';
      return;
    case BooleanFormula::Kind::And:
    case BooleanFormula::Kind::Or:
      out << '(' << (f.kind() == BooleanFormula::Kind::And ? "and" : "or");
      for (const auto& a : f.args()) {
        out << ' ';
        print_formula(out, a, props);
      }
      out << ')';
      return;
  }
}

// --- s-trees ----------------------------------------------------------------

STree stree_from_sexp(const Sexp& e) {
  STree node;
  if (e.is_symbol) {
    node.pos = e.symbol;
    return node;
  }
  if (e.items.empty() || !e.items[0].is_symbol) {
    throw ParseError("strategic-tree node needs a position head");
  }
  node.pos = e.items[0].symbol;
  for (size_t i = 1; i < e.items.size(); ++i) {
    node.children.push_back(stree_from_sexp(e.items[i]));
  }
  std::sort(node.children.begin(), node.children.end(),
            [](const STree& a, const STree& b) { return a.pos < b.pos; });
  for (size_t i = 0; i + 1 < node.children.size(); ++i) {
    if (node.children[i].pos == node.children[i + 1].pos) {
      throw ParseError("duplicate child '" + node.children[i].pos +
                       "' below '" + node.pos + "'");
    }
  }
  return node;
}

void print_stree_rec(std::ostream& out, const STree& t) {
  out << '(' << t.pos;
  for (const auto& c : t.children) {
    out << ' ';
    print_stree_rec(out, c);
  }
  out << ')';
}

// --- arena delta rows -------------------------------------------------------

struct DeltaRow {
  PosId p;
  ActId a1;  // -1 = wildcard
  ActId a2;  // -1 = wildcard
  PosId target;
  int line;
  int specificity() const { return (a1 >= 0) + (a2 >= 0); }
  bool covers(ActId b1, ActId b2) const {
    return (a1 < 0 || a1 == b1) && (a2 < 0 || a2 == b2);
  }
};

}  // namespace

GameArena parse_arena(const std::string& text) {
  GameArena arena;
  bool have_props = false, have_a1 = false, have_a2 = false, have_pos = false;
  std::vector<DeltaRow> rows;
  std::vector<bool> labeled;

  // First pass: header lines. Body lines may then reference the tables in
  // any order.
  struct BodyLine {
    int line;
    std::vector<std::string> toks;
  };
  std::vector<BodyLine> body;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<std::string> toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;

    std::string head = toks[0];
    size_t arg0 = 1;
    if (!head.empty() && head.back() == ':') head.pop_back();
    if (head == "props" || head == "actions1" || head == "actions2" ||
        head == "positions") {
      // accept both `props:` and `props :`
      if (arg0 < toks.size() && toks[arg0] == ":") ++arg0;
      std::vector<std::string> names(toks.begin() + arg0, toks.end());
      for (const auto& n : names) require_identifier(n, head.c_str(), line_no);
      auto assign = [&](std::vector<std::string>& dst, bool& flag) {
        if (flag) {
          throw ParseError("line " + std::to_string(line_no) + ": repeated '" +
                           head + "' header");
        }
        std::vector<std::string> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": duplicate name in '" + head + "'");
        }
        dst = names;
        flag = true;
      };
      if (head == "props") {
        for (const auto& n : names) {
          if (is_reserved_prop(n)) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": proposition name '" + n + "' is reserved");
          }
        }
        assign(arena.props, have_props);
      } else if (head == "actions1") {
        assign(arena.actions1, have_a1);
      } else if (head == "actions2") {
        assign(arena.actions2, have_a2);
      } else {
        assign(arena.positions, have_pos);
      }
      continue;
    }
    body.push_back({line_no, std::move(toks)});
  }

  if (!have_props || !have_a1 || !have_a2 || !have_pos) {
    throw ParseError(
        "missing required header (props/actions1/actions2/positions)");
  }
  labeled.assign(arena.positions.size(), false);
  arena.valuation.assign(arena.positions.size(),
                         std::vector<bool>(arena.props.size(), false));

  for (const BodyLine& entry : body) {
    const std::vector<std::string>& toks = entry.toks;
    line_no = entry.line;

    if (toks[0] == "label") {
      if (toks.size() < 3 || toks[2] != ":") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'label <position> : <prop>*'");
      }
      int p = find_name(arena.positions, toks[1]);
      if (p < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown position '" + toks[1] + "'");
      }
      if (labeled[p]) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": position '" + toks[1] + "' labeled twice");
      }
      labeled[p] = true;
      for (size_t i = 3; i < toks.size(); ++i) {
        int q = find_name(arena.props, toks[i]);
        if (q < 0) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": unknown proposition '" + toks[i] + "'");
        }
        arena.valuation[p][q] = true;
      }
      continue;
    }

    if (toks[0] == "delta") {
      if (toks.size() != 6 || toks[4] != "->") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'delta <pos> <act1|*> <act2|*> -> <pos>'");
      }
      DeltaRow row;
      row.line = line_no;
      row.p = find_name(arena.positions, toks[1]);
      if (row.p < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown position '" + toks[1] + "'");
      }
      row.a1 = toks[2] == "*" ? -1 : find_name(arena.actions1, toks[2]);
      if (toks[2] != "*" && row.a1 < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown player-1 action '" + toks[2] + "'");
      }
      row.a2 = toks[3] == "*" ? -1 : find_name(arena.actions2, toks[3]);
      if (toks[3] != "*" && row.a2 < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown player-2 action '" + toks[3] + "'");
      }
      row.target = find_name(arena.positions, toks[5]);
      if (row.target < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown position '" + toks[5] + "'");
      }
      rows.push_back(row);
      continue;
    }

    throw ParseError("line " + std::to_string(line_no) +
                     ": unrecognized directive '" + toks[0] + "'");
  }

  // Resolve wildcards: the most specific row wins; equally specific rows may
  // overlap only when they agree, and two exact rows for one cell never may.
  arena.delta_table.assign(
      arena.positions.size() * arena.actions1.size() * arena.actions2.size(),
      -1);
  for (PosId p = 0; p < arena.num_positions(); ++p) {
    for (ActId a1 = 0; a1 < arena.num_actions1(); ++a1) {
      for (ActId a2 = 0; a2 < arena.num_actions2(); ++a2) {
        const DeltaRow* best = nullptr;
        for (const DeltaRow& row : rows) {
          if (row.p != p || !row.covers(a1, a2)) continue;
          if (!best || row.specificity() > best->specificity()) {
            best = &row;
            continue;
          }
          if (row.specificity() == best->specificity()) {
            if (best->specificity() == 2) {
              throw ParseError("line " + std::to_string(row.line) +
                               ": duplicate transition (also line " +
                               std::to_string(best->line) + ")");
            }
            if (row.target != best->target) {
              throw ParseError("line " + std::to_string(row.line) +
                               ": conflicts with line " +
                               std::to_string(best->line) + " at '" +
                               arena.positions[p] + " " + arena.actions1[a1] +
                               " " + arena.actions2[a2] + "'");
            }
          }
        }
        if (!best) {
          throw ParseError("transition map not total: no row for '" +
                           arena.positions[p] + " " + arena.actions1[a1] +
                           " " + arena.actions2[a2] + "'");
        }
        arena.delta_table[(static_cast<size_t>(p) * arena.actions1.size() + a1) *
                              arena.actions2.size() +
                          a2] = best->target;
      }
    }
  }

  arena.check();
  return arena;
}

std::string print_arena(const GameArena& arena) {
  std::ostringstream out;
  auto list = [&](const char* head, const std::vector<std::string>& names) {
    out << head << ':';
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
  };
  list("props", arena.props);
  list("actions1", arena.actions1);
  list("actions2", arena.actions2);
  list("positions", arena.positions);
  out << '\n';
  for (PosId p = 0; p < arena.num_positions(); ++p) {
    out << "label " << arena.positions[p] << " :";
    for (PropId q = 0; q < arena.num_props(); ++q) {
      if (arena.valuation[p][q]) out << ' ' << arena.props[q];
    }
    out << '\n';
  }
  out << '\n';
  for (PosId p = 0; p < arena.num_positions(); ++p) {
    PosId first = arena.delta(p, 0, 0);
    bool constant = true;
    bool rows_constant = true;  // each a1-row constant over a2
    bool cols_constant = true;  // each a2-column constant over a1
    for (ActId a1 = 0; a1 < arena.num_actions1(); ++a1) {
      for (ActId a2 = 0; a2 < arena.num_actions2(); ++a2) {
        PosId t = arena.delta(p, a1, a2);
        if (t != first) constant = false;
        if (t != arena.delta(p, a1, 0)) rows_constant = false;
        if (t != arena.delta(p, 0, a2)) cols_constant = false;
      }
    }
    const auto& pn = arena.positions[p];
    if (constant) {
      out << "delta " << pn << " * * -> " << arena.positions[first] << '\n';
    } else if (rows_constant) {
      for (ActId a1 = 0; a1 < arena.num_actions1(); ++a1) {
        out << "delta " << pn << ' ' << arena.actions1[a1] << " * -> "
            << arena.positions[arena.delta(p, a1, 0)] << '\n';
      }
    } else if (cols_constant) {
      for (ActId a2 = 0; a2 < arena.num_actions2(); ++a2) {
        out << "delta " << pn << " * " << arena.actions2[a2] << " -> "
            << arena.positions[arena.delta(p, 0, a2)] << '\n';
      }
    } else {
      for (ActId a1 = 0; a1 < arena.num_actions1(); ++a1) {
        for (ActId a2 = 0; a2 < arena.num_actions2(); ++a2) {
          out << "delta " << pn << ' ' << arena.actions1[a1] << ' '
              << arena.actions2[a2] << " -> "
              << arena.positions[arena.delta(p, a1, a2)] << '\n';
        }
      }
    }
  }
  return out.str();
}

AttackTree parse_tree(const std::string& text,
                      const std::vector<std::string>& props) {
  Sexp e = parse_single_sexp(text, "tree");
  return tree_from_sexp(e, props);
}

std::string print_tree(const AttackTree& tree,
                       const std::vector<std::string>& props) {
  std::ostringstream out;
  if (tree.op == AttackTree::Op::Leaf) {
    print_formula(out, tree.formula, props);
    return out.str();
  }
  const char* head = tree.op == AttackTree::Op::Or
                         ? "OR"
                         : tree.op == AttackTree::Op::And ? "AND" : "SAND";
  out << '(' << head;
  for (const auto& c : tree.children) {
    out << ' ' << print_tree(c, props);
  }
  out << ')';
  return out.str();
}

Path parse_path(const std::string& text, const TransitionSystem& ts) {
  std::vector<std::string> toks;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    for (auto& tok : split_ws(strip_comment(raw))) {
      toks.push_back(std::move(tok));
    }
  }
  if (toks.empty()) throw ParseError("empty path");
  Path p;
  for (const auto& tok : toks) {
    int s = find_name(ts.states, tok);
    if (s < 0) throw ParseError("unknown state '" + tok + "'");
    p.states.push_back(s);
  }
  return p;
}

std::string print_path(const Path& path, const TransitionSystem& ts) {
  std::ostringstream out;
  for (size_t i = 0; i < path.states.size(); ++i) {
    if (i) out << ' ';
    out << ts.states[path.states[i]];
  }
  return out.str();
}

STree parse_stree(const std::string& text) {
  Sexp e = parse_single_sexp(text, "strategic tree");
  return stree_from_sexp(e);
}

std::string print_stree(const STree& tree) {
  std::ostringstream out;
  print_stree_rec(out, tree);
  return out.str();
}

MemorylessStrategy parse_strategy(const std::string& text,
                                  const GameArena& arena) {
  MemorylessStrategy strategy;
  strategy.choice.assign(arena.positions.size(), -1);

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<std::string> toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks.size() != 3 || toks[1] != "->") {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected '<position> -> <action1>'");
    }
    int p = find_name(arena.positions, toks[0]);
    if (p < 0) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": unknown position '" + toks[0] + "'");
    }
    int a = find_name(arena.actions1, toks[2]);
    if (a < 0) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": unknown player-1 action '" + toks[2] + "'");
    }
    if (strategy.choice[p] >= 0) {
      throw ParseError("line " + std::to_string(line_no) + ": position '" +
                       toks[0] + "' assigned twice");
    }
    strategy.choice[p] = a;
  }
  for (PosId p = 0; p < arena.num_positions(); ++p) {
    if (strategy.choice[p] < 0) {
      throw ParseError("strategy leaves position '" + arena.positions[p] +
                       "' unassigned");
    }
  }
  return strategy;
}

std::string print_strategy(const MemorylessStrategy& strategy,
                           const GameArena& arena) {
  std::ostringstream out;
  for (PosId p = 0; p < arena.num_positions(); ++p) {
    out << arena.positions[p] << " -> " << arena.actions1[strategy.choice[p]]
        << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

}  // namespace atg
