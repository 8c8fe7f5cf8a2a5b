#include "ccst/formula.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>
#include <stdexcept>

namespace ccst {

FormulaId FormulaStore::mk(FormulaNode n) {
  auto key = std::make_tuple(n.op, n.a, n.b, n.atom);
  auto it = cons_.find(key);
  if (it != cons_.end()) return it->second;
  FormulaId id = static_cast<FormulaId>(nodes_.size());
  nodes_.push_back(std::move(n));
  cons_.emplace(std::move(key), id);
  return id;
}

FormulaId FormulaStore::conj(const std::vector<FormulaId>& fs) {
  if (fs.empty()) return tru();
  FormulaId acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = mk_and(acc, fs[i]);
  return acc;
}

FormulaId FormulaStore::disj(const std::vector<FormulaId>& fs) {
  if (fs.empty()) return fls();
  FormulaId acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = mk_or(acc, fs[i]);
  return acc;
}

namespace {

int precedence(FOp op) {
  switch (op) {
    case FOp::Implies: return 1;
    case FOp::Or: return 2;
    case FOp::And: return 3;
    case FOp::U:
    case FOp::W: return 4;
    default: return 5;
  }
}

}  // namespace

std::string FormulaStore::print(FormulaId id) const {
  std::function<std::string(FormulaId, int)> go = [&](FormulaId f, int outer) {
    const FormulaNode& n = nodes_[f];
    std::string s;
    int prec = precedence(n.op);
    switch (n.op) {
      case FOp::True: return std::string("true");
      case FOp::False: return std::string("false");
      case FOp::Atom: return n.atom;
      case FOp::Not: return "!" + go(n.a, 5);
      case FOp::X: return "X " + go(n.a, 5);
      case FOp::Y: return "Y " + go(n.a, 5);
      case FOp::F: return "F " + go(n.a, 5);
      case FOp::G: return "G " + go(n.a, 5);
      // the parser associates & and | to the left, so right nesting is
      // printed parenthesised
      case FOp::And: s = go(n.a, 3) + " & " + go(n.b, 4); break;
      case FOp::Or: s = go(n.a, 2) + " | " + go(n.b, 3); break;
      case FOp::Implies: s = go(n.a, 2) + " -> " + go(n.b, 1); break;
      case FOp::U: s = go(n.a, 5) + " U " + go(n.b, 4); break;
      case FOp::W: s = go(n.a, 5) + " W " + go(n.b, 4); break;
    }
    if (prec < outer || (prec == outer && (n.op == FOp::U || n.op == FOp::W)))
      return "(" + s + ")";
    if (prec <= outer && (n.op == FOp::Implies)) return "(" + s + ")";
    return s;
  };
  return go(id, 0);
}

FormulaId FormulaStore::nnf(FormulaId id) {
  std::function<FormulaId(FormulaId, bool)> go = [&](FormulaId f, bool neg) -> FormulaId {
    const FormulaNode n = nodes_[f];
    switch (n.op) {
      case FOp::True: return neg ? fls() : tru();
      case FOp::False: return neg ? tru() : fls();
      case FOp::Atom: return neg ? mk_not(f) : f;
      case FOp::Not: return go(n.a, !neg);
      case FOp::And: {
        FormulaId a = go(n.a, neg), b = go(n.b, neg);
        return neg ? mk_or(a, b) : mk_and(a, b);
      }
      case FOp::Or: {
        FormulaId a = go(n.a, neg), b = go(n.b, neg);
        return neg ? mk_and(a, b) : mk_or(a, b);
      }
      case FOp::Implies: {
        FormulaId a = go(n.a, !neg), b = go(n.b, neg);
        return neg ? mk_and(go(n.a, false), go(n.b, true)) : mk_or(a, b);
      }
      case FOp::X: return neg ? weak_next(go(n.a, true)) : next(go(n.a, false));
      case FOp::Y: return neg ? next(go(n.a, true)) : weak_next(go(n.a, false));
      case FOp::F: return neg ? weak_until(go(n.a, true), fls()) : until(tru(), go(n.a, false));
      case FOp::G: return neg ? until(tru(), go(n.a, true)) : weak_until(go(n.a, false), fls());
      case FOp::U: {
        if (!neg) return until(go(n.a, false), go(n.b, false));
        // !(a U b) = (!b) W (!a & !b)
        FormulaId na = go(n.a, true), nb = go(n.b, true);
        return weak_until(nb, mk_and(na, nb));
      }
      case FOp::W: {
        if (!neg) return weak_until(go(n.a, false), go(n.b, false));
        // !(a W b) = (!b) U (!a & !b)
        FormulaId na = go(n.a, true), nb = go(n.b, true);
        return until(nb, mk_and(na, nb));
      }
    }
    throw std::logic_error("nnf: bad op");
  };
  return go(id, false);
}

bool FormulaStore::is_safety_fragment(FormulaId id) const {
  std::function<bool(FormulaId)> go = [&](FormulaId f) -> bool {
    const FormulaNode& n = nodes_[f];
    switch (n.op) {
      case FOp::True:
      case FOp::False:
      case FOp::Atom: return true;
      case FOp::Not: return nodes_[n.a].op == FOp::Atom;
      case FOp::And:
      case FOp::Or: return go(n.a) && go(n.b);
      case FOp::Implies:
        // a -> b expands to !a | b; admissible when !a stays a literal.
        return nodes_[n.a].op == FOp::Atom && go(n.b);
      case FOp::Y:
      case FOp::G: return go(n.a);
      case FOp::W: return go(n.a) && go(n.b);
      case FOp::X:
      case FOp::F:
      case FOp::U: return false;
    }
    return false;
  };
  return go(id);
}

std::set<std::string> FormulaStore::atoms_of(FormulaId id) const {
  std::set<std::string> out;
  std::function<void(FormulaId)> go = [&](FormulaId f) {
    const FormulaNode& n = nodes_[f];
    if (n.op == FOp::Atom) out.insert(n.atom);
    if (n.a >= 0) go(n.a);
    if (n.b >= 0) go(n.b);
  };
  go(id);
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct FLexer {
  const std::string& s;
  size_t i = 0;
  explicit FLexer(const std::string& str) : s(str) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_arrow() {
    skip();
    if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '>') {
      i += 2;
      return true;
    }
    return false;
  }
  std::string word() {
    skip();
    std::string w;
    if (i < s.size() && s[i] == '\'') {
      w += s[i++];
    }
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                            s[i] == '$' || s[i] == '#')) {
      w += s[i++];
    }
    return w;
  }
};

struct FParser {
  FormulaStore& store;
  FLexer lex;

  FParser(FormulaStore& st, const std::string& text) : store(st), lex(text) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("formula parse error: " + msg);
  }

  // implies < or < and < U/W < unary
  FormulaId parse() {
    FormulaId f = parse_implies();
    if (!lex.eof()) fail("trailing input");
    return f;
  }
  FormulaId parse_implies() {
    FormulaId a = parse_or();
    if (lex.eat_arrow()) return store.implies(a, parse_implies());
    return a;
  }
  FormulaId parse_or() {
    FormulaId a = parse_and();
    while (lex.peek() == '|') {
      lex.eat('|');
      a = store.mk_or(a, parse_and());
    }
    return a;
  }
  FormulaId parse_and() {
    FormulaId a = parse_binary();
    while (lex.peek() == '&') {
      lex.eat('&');
      a = store.mk_and(a, parse_binary());
    }
    return a;
  }
  FormulaId parse_binary() {
    FormulaId a = parse_unary();
    for (;;) {
      size_t save = lex.i;
      std::string w = lex.word();
      if (w == "U")
        a = store.until(a, parse_unary());
      else if (w == "W")
        a = store.weak_until(a, parse_unary());
      else {
        lex.i = save;
        return a;
      }
    }
  }
  FormulaId parse_unary() {
    if (lex.eat('!')) return store.mk_not(parse_unary());
    if (lex.eat('(')) {
      FormulaId f = parse_implies();
      if (!lex.eat(')')) fail("expected ')'");
      return f;
    }
    std::string w = lex.word();
    if (w.empty()) fail("expected a formula");
    if (w == "true") return store.tru();
    if (w == "false") return store.fls();
    if (w == "X") return store.next(parse_unary());
    if (w == "Y") return store.weak_next(parse_unary());
    if (w == "F") return store.eventually(parse_unary());
    if (w == "G") return store.always(parse_unary());
    if (w == "U" || w == "W") fail("'" + w + "' is a binary operator");
    return store.atom(w);
  }
};

}  // namespace

FormulaId parse_formula(FormulaStore& store, const std::string& text) {
  FParser p(store, text);
  return p.parse();
}

// ------------------------------------------------------------- evaluation

namespace {

// Tri-state memo for the loop fixpoints: F/U assume false on re-entry
// (least fixpoint), G/W assume true (greatest fixpoint).
struct Evaluator {
  const FormulaStore& store;
  const PropPath& path;
  size_t n_stem, n_cycle, total;
  // memo[sub][position]: 0 unknown, 1 in progress, 2 false, 3 true; the
  // subformula indices are assigned densely on first use
  std::unordered_map<FormulaId, int> sub_index;
  std::vector<std::vector<signed char>> memo;

  Evaluator(const FormulaStore& s, const PropPath& p)
      : store(s), path(p), n_stem(p.stem.size()), n_cycle(p.cycle.size()),
        total(n_stem + n_cycle) {}

  std::vector<signed char>& cells(FormulaId f) {
    auto [it, inserted] = sub_index.emplace(f, static_cast<int>(memo.size()));
    if (inserted) memo.emplace_back(total, 0);
    return memo[it->second];
  }

  const std::set<std::string>& val(size_t pos) const {
    return pos < n_stem ? path.stem[pos] : path.cycle[pos - n_stem];
  }

  bool has_next(size_t pos) const {
    if (!path.finite()) return true;
    return pos + 1 < total;
  }
  size_t next_pos(size_t pos) const {
    size_t p = pos + 1;
    if (!path.finite() && p >= total) p = n_stem;  // wrap the cycle
    return p;
  }

  bool eval(FormulaId f, size_t pos) {
    std::vector<signed char>& row = cells(f);
    signed char& cell = row[pos];
    if (cell >= 2) return cell == 3;
    if (cell == 1) {
      // In progress: least fixpoint for F/U, greatest for G/W.
      FOp op = store.node(f).op;
      return op == FOp::G || op == FOp::W || op == FOp::Y;
    }
    cell = 1;
    bool r = compute(f, pos);
    // compute() may have grown the memo and invalidated `row`
    cells(f)[pos] = r ? 3 : 2;
    return r;
  }

  bool compute(FormulaId f, size_t pos) {
    const FormulaNode& n = store.node(f);
    switch (n.op) {
      case FOp::True: return true;
      case FOp::False: return false;
      case FOp::Atom: return val(pos).count(n.atom) > 0;
      case FOp::Not: return !eval(n.a, pos);
      case FOp::And: return eval(n.a, pos) && eval(n.b, pos);
      case FOp::Or: return eval(n.a, pos) || eval(n.b, pos);
      case FOp::Implies: return !eval(n.a, pos) || eval(n.b, pos);
      case FOp::X: return has_next(pos) && eval(n.a, next_pos(pos));
      case FOp::Y: return !has_next(pos) || eval(n.a, next_pos(pos));
      case FOp::F:
        if (eval(n.a, pos)) return true;
        return has_next(pos) && eval(f, next_pos(pos));
      case FOp::G:
        if (!eval(n.a, pos)) return false;
        return !has_next(pos) || eval(f, next_pos(pos));
      case FOp::U:
        if (eval(n.b, pos)) return true;
        if (!eval(n.a, pos)) return false;
        return has_next(pos) && eval(f, next_pos(pos));
      case FOp::W:
        if (eval(n.b, pos)) return true;
        if (!eval(n.a, pos)) return false;
        return !has_next(pos) || eval(f, next_pos(pos));
    }
    throw std::logic_error("eval: bad op");
  }
};

}  // namespace

bool eval(const FormulaStore& store, FormulaId phi, const PropPath& path) {
  if (path.positions() == 0) throw std::invalid_argument("eval: empty path");
  Evaluator ev(store, path);
  return ev.eval(phi, 0);
}

// ---------------------------------------------------------------- builders

FormulaId build_wf(FormulaStore& s, const std::vector<TaskRef>& tasks) {
  std::vector<FormulaId> conjs;
  for (const auto& t : tasks) {
    FormulaId en = s.atom(en_task_atom(t.name));
    FormulaId oc = s.atom(oc_task_atom(t.name));
    conjs.push_back(s.always(s.implies(s.always(en), s.eventually(oc))));
  }
  return s.conj(conjs);
}

FormulaId build_sf(FormulaStore& s, const std::vector<TaskRef>& tasks) {
  std::vector<FormulaId> conjs;
  for (const auto& t : tasks) {
    FormulaId en = s.atom(en_task_atom(t.name));
    FormulaId oc = s.atom(oc_task_atom(t.name));
    conjs.push_back(s.always(s.implies(s.always(s.eventually(en)), s.eventually(oc))));
  }
  return s.conj(conjs);
}

FormulaId build_j(FormulaStore& s, const std::vector<int>& nonblocked) {
  std::vector<FormulaId> conjs;
  for (int t : nonblocked)
    conjs.push_back(
        s.always(s.implies(s.atom(en_tr_atom(t)), s.eventually(s.atom(interfere_atom(t))))));
  return s.conj(conjs);
}

FormulaId transform_q(FormulaStore& s, FormulaId phi) {
  std::map<FormulaId, FormulaId> memo;
  std::function<FormulaId(FormulaId)> go = [&](FormulaId f) -> FormulaId {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    const FormulaNode n = s.node(f);
    FormulaId r = f;
    switch (n.op) {
      case FOp::True:
      case FOp::False:
      case FOp::Atom: r = f; break;
      case FOp::Not: r = s.mk_not(go(n.a)); break;
      case FOp::And: r = s.mk_and(go(n.a), go(n.b)); break;
      case FOp::Or: r = s.mk_or(go(n.a), go(n.b)); break;
      case FOp::Implies: r = s.implies(go(n.a), go(n.b)); break;
      case FOp::F: r = s.eventually(go(n.a)); break;
      case FOp::G: r = s.always(go(n.a)); break;
      case FOp::U: r = s.until(go(n.a), go(n.b)); break;
      case FOp::W: {
        // W is derived: a W b = (a U b) | G a, mapped homomorphically.
        FormulaId a = go(n.a), b = go(n.b);
        r = s.weak_until(a, b);
        break;
      }
      case FOp::X:
      case FOp::Y: {
        FormulaId qa = go(n.a);
        FormulaId tr = s.atom("tr");
        FormulaId step = s.mk_and(
            s.implies(tr, s.next(s.mk_and(s.mk_not(tr), qa))),
            s.implies(s.mk_not(tr), s.next(s.mk_and(tr, qa))));
        // Y = !X!, so Q(Y a) = !Q(X !a).
        r = n.op == FOp::X ? step
                           : s.mk_not(s.mk_and(
                                 s.implies(tr, s.next(s.mk_and(s.mk_not(tr), s.mk_not(qa)))),
                                 s.implies(s.mk_not(tr),
                                           s.next(s.mk_and(tr, s.mk_not(qa))))));
        break;
      }
    }
    memo[f] = r;
    return r;
  };
  return go(phi);
}

FormulaId formula_z(FormulaStore& s) {
  FormulaId tr = s.atom("tr");
  FormulaId ntr = s.mk_not(tr);
  return s.mk_and(s.always(s.implies(tr, s.mk_or(s.always(tr), s.next(ntr)))),
                  s.always(s.implies(ntr, s.mk_or(s.always(ntr), s.next(tr)))));
}

}  // namespace ccst
