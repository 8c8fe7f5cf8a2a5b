#include "ccst/process.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ccst {

ProcessPtr Process::nil() { return choice({}); }

ProcessPtr Process::choice(std::vector<Prefix> branches) {
  auto p = std::make_shared<Process>();
  p->kind = Kind::Choice;
  p->branches = std::move(branches);
  return p;
}

ProcessPtr Process::parallel(ProcessPtr l, ProcessPtr r) {
  auto p = std::make_shared<Process>();
  p->kind = Kind::Parallel;
  p->left = std::move(l);
  p->right = std::move(r);
  return p;
}

ProcessPtr Process::restrict(ProcessPtr c, std::set<std::string> names) {
  auto p = std::make_shared<Process>();
  p->kind = Kind::Restrict;
  p->child = std::move(c);
  p->restricted = std::move(names);
  return p;
}

ProcessPtr Process::relabelling(ProcessPtr c, std::map<std::string, std::string> f) {
  auto p = std::make_shared<Process>();
  p->kind = Kind::Relabel;
  p->child = std::move(c);
  p->relabel = std::move(f);
  return p;
}

ProcessPtr Process::identifier(std::string name) {
  auto p = std::make_shared<Process>();
  p->kind = Kind::Ident;
  p->ident = std::move(name);
  return p;
}

ActionLabel apply_relabelling(const std::map<std::string, std::string>& f, const ActionLabel& a) {
  if (!a.is_visible()) return a;
  auto it = f.find(a.name);
  if (it == f.end()) return a;
  return {a.kind, it->second};
}

namespace {

// Print contexts: 0 top / parallel-left, 1 parallel-right (nested parallel
// needs parens to keep the left-associated shape), 3 prefix continuation
// (parallel and multi-branch choice need parens), 4 restriction/relabelling
// operand (everything but identifiers, nil and postfix chains needs parens).
void print(std::ostringstream& os, const ProcessPtr& p, int level, bool canon);

void print_prefix(std::ostringstream& os, const Prefix& b, bool canon) {
  os << b.action.str();
  if (b.tag) os << "@" << *b.tag;
  const Process& cont = *b.continuation;
  bool is_nil = cont.kind == Process::Kind::Choice && cont.branches.empty();
  if (is_nil) {
    os << ".0";
  } else if (cont.kind == Process::Kind::Choice && cont.branches.size() == 1) {
    os << ".";
    print_prefix(os, cont.branches[0], canon);
  } else {
    os << ".";
    print(os, b.continuation, 3, canon);
  }
}

void print(std::ostringstream& os, const ProcessPtr& p, int level, bool canon) {
  switch (p->kind) {
    case Process::Kind::Choice: {
      if (p->branches.empty()) {
        os << "0";
        return;
      }
      std::vector<std::string> parts;
      parts.reserve(p->branches.size());
      for (const auto& b : p->branches) {
        std::ostringstream one;
        print_prefix(one, b, canon);
        parts.push_back(one.str());
      }
      if (canon) std::sort(parts.begin(), parts.end());
      bool paren = parts.size() > 1 ? level >= 3 : level >= 4;
      if (paren) os << "(";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << " + ";
        os << parts[i];
      }
      if (paren) os << ")";
      return;
    }
    case Process::Kind::Parallel: {
      bool paren = level >= 1;
      if (paren) os << "(";
      print(os, p->left, 0, canon);
      os << " | ";
      print(os, p->right, 1, canon);
      if (paren) os << ")";
      return;
    }
    case Process::Kind::Restrict: {
      print(os, p->child, 4, canon);
      os << "\\{";
      bool first = true;
      for (const auto& n : p->restricted) {
        if (!first) os << ",";
        first = false;
        os << n;
      }
      os << "}";
      return;
    }
    case Process::Kind::Relabel: {
      print(os, p->child, 4, canon);
      os << "[";
      bool first = true;
      for (const auto& [from, to] : p->relabel) {
        if (!first) os << ",";
        first = false;
        os << from << "->" << to;
      }
      os << "]";
      return;
    }
    case Process::Kind::Ident:
      os << p->ident;
      return;
  }
}

}  // namespace

std::string pretty_print(const ProcessPtr& p) {
  std::ostringstream os;
  print(os, p, 0, false);
  return os.str();
}

std::string canonical(const ProcessPtr& p) {
  std::ostringstream os;
  print(os, p, 0, true);
  return os.str();
}

bool structurally_equal(const ProcessPtr& a, const ProcessPtr& b) {
  return pretty_print(a) == pretty_print(b);
}

namespace {

void walk(const ProcessPtr& p, const std::function<void(const Process&)>& fn) {
  fn(*p);
  switch (p->kind) {
    case Process::Kind::Choice:
      for (const auto& b : p->branches) walk(b.continuation, fn);
      break;
    case Process::Kind::Parallel:
      walk(p->left, fn);
      walk(p->right, fn);
      break;
    case Process::Kind::Restrict:
    case Process::Kind::Relabel:
      walk(p->child, fn);
      break;
    case Process::Kind::Ident:
      break;
  }
}

// An identifier is guarded when every cycle through defining equations
// passes a prefix.  Unguarded cycles (X = Y; Y = X) would make derivation
// diverge, so they are rejected here.
void check_guarded(const Definitions& defs, std::vector<std::string>& issues) {
  // Collect, per definition, the identifiers reachable without passing a prefix.
  std::map<std::string, std::set<std::string>> head;
  std::function<void(const ProcessPtr&, std::set<std::string>&)> heads =
      [&](const ProcessPtr& p, std::set<std::string>& out) {
        switch (p->kind) {
          case Process::Kind::Choice:
            break;  // prefixes guard their continuations
          case Process::Kind::Parallel:
            heads(p->left, out);
            heads(p->right, out);
            break;
          case Process::Kind::Restrict:
          case Process::Kind::Relabel:
            heads(p->child, out);
            break;
          case Process::Kind::Ident:
            out.insert(p->ident);
            break;
        }
      };
  for (const auto& [name, body] : defs.defs) heads(body, head[name]);
  for (const auto& [name, hs] : head) {
    // DFS for a cycle back to `name` through head identifiers.
    std::set<std::string> seen;
    std::vector<std::string> stack(hs.begin(), hs.end());
    bool cyclic = false;
    while (!stack.empty()) {
      std::string x = stack.back();
      stack.pop_back();
      if (x == name) {
        cyclic = true;
        break;
      }
      if (!seen.insert(x).second) continue;
      auto it = head.find(x);
      if (it != head.end())
        for (const auto& y : it->second) stack.push_back(y);
    }
    if (cyclic) issues.push_back("unguarded recursion through definition '" + name + "'");
  }
}

}  // namespace

void validate(const Definitions& defs, const ProcessPtr& root) {
  std::vector<std::string> issues;

  auto check_term = [&](const ProcessPtr& p, const std::string& where) {
    walk(p, [&](const Process& q) {
      if (q.kind == Process::Kind::Ident && !defs.defs.count(q.ident))
        issues.push_back("unbound identifier '" + q.ident + "' in " + where);
      if (q.kind == Process::Kind::Restrict)
        for (const auto& n : q.restricted)
          if (n == "tau" || n == "t")
            issues.push_back("restriction set may contain names only, got '" + n + "' in " + where);
      if (q.kind == Process::Kind::Relabel)
        for (const auto& [from, to] : q.relabel)
          if (from == "tau" || from == "t" || to == "tau" || to == "t")
            issues.push_back("relabelling must map names to names, got '" + from + "->" + to +
                             "' in " + where);
    });
  };

  check_term(root, "root process");
  for (const auto& [name, body] : defs.defs) check_term(body, "definition of '" + name + "'");

  check_guarded(defs, issues);

  // Signal discipline: an emission 'sig may only occur as a self-loop prefix
  // at a register definition, i.e. with the defining identifier itself as
  // continuation.
  for (const auto& sig : defs.signals) {
    auto emits_ok = [&](const std::string& def_name, const ProcessPtr& body) {
      walk(body, [&](const Process& q) {
        if (q.kind != Process::Kind::Choice) return;
        for (const auto& b : q.branches) {
          if (b.action.kind == ActKind::Coname && b.action.name == sig) {
            const Process& cont = *b.continuation;
            if (cont.kind != Process::Kind::Ident || cont.ident != def_name)
              issues.push_back("signal '" + sig + "' emitted in '" + def_name +
                               "' is not a self-loop at the defining identifier");
          }
        }
      });
    };
    for (const auto& [name, body] : defs.defs) emits_ok(name, body);
    walk(root, [&](const Process& q) {
      if (q.kind != Process::Kind::Choice) return;
      for (const auto& b : q.branches)
        if (b.action.kind == ActKind::Coname && b.action.name == sig)
          issues.push_back("signal '" + sig + "' emitted outside a register definition");
    });
  }

  if (!issues.empty()) {
    std::string msg = "validation failed:";
    for (const auto& s : issues) msg += "\n  - " + s;
    throw ValidationError(msg, issues);
  }
}

}  // namespace ccst
