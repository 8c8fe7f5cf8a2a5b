#include "ccst/petri.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "ccst/parse.hpp"

namespace ccst {

Marking madd(const Marking& a, const Marking& b) {
  Marking r = a;
  for (const auto& [p, n] : b) {
    int v = (r.count(p) ? r[p] : 0) + n;
    if (v)
      r[p] = v;
    else
      r.erase(p);
  }
  return r;
}

Marking msub(const Marking& a, const Marking& b) {
  Marking r = a;
  for (const auto& [p, n] : b) {
    auto it = r.find(p);
    int v = (it != r.end() ? it->second : 0) - n;
    if (v > 0)
      r[p] = v;
    else
      r.erase(p);
  }
  return r;
}

Marking mmin(const Marking& a, const Marking& b) {
  Marking r;
  for (const auto& [p, n] : a) {
    auto it = b.find(p);
    if (it != b.end()) r[p] = std::min(n, it->second);
  }
  return r;
}

bool mleq(const Marking& a, const Marking& b) {
  for (const auto& [p, n] : a) {
    auto it = b.find(p);
    if (it == b.end() || it->second < n) return false;
  }
  return true;
}

std::string marking_str(const Marking& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [p, n] : m) {
    if (!first) os << ",";
    first = false;
    os << p;
    if (n != 1) os << "*" << n;
  }
  os << "}";
  return os.str();
}

void PetriNet::check_wellformed() const {
  std::vector<std::string> issues;
  for (const auto& t : transitions) {
    if (t.pre.empty()) issues.push_back("transition '" + t.name + "' has no preplace");
    for (const auto& [p, n] : t.pre)
      if (t.read.count(p))
        issues.push_back("place '" + p + "' has both a flow and a read arc to '" + t.name + "'");
    for (const auto& m : {&t.pre, &t.post, &t.read})
      for (const auto& [p, n] : *m)
        if (!places.count(p)) issues.push_back("unknown place '" + p + "' at '" + t.name + "'");
  }
  for (const auto& [p, n] : initial)
    if (!places.count(p)) issues.push_back("unknown place '" + p + "' in the initial marking");
  if (!issues.empty()) {
    std::string msg = "net is not well-formed:";
    for (const auto& s : issues) msg += "\n  - " + s;
    throw ValidationError(msg, issues);
  }
}

const PTransition& PetriNet::transition(const std::string& name) const {
  int i = transition_index(name);
  if (i < 0) throw std::out_of_range("no transition named '" + name + "'");
  return transitions[i];
}

int PetriNet::transition_index(const std::string& name) const {
  for (size_t i = 0; i < transitions.size(); ++i)
    if (transitions[i].name == name) return static_cast<int>(i);
  return -1;
}

bool enabled(const PetriNet&, const Marking& m, const PTransition& t) {
  return mleq(madd(t.pre, t.read), m);
}

Marking fire(const PetriNet& net, const Marking& m, const PTransition& t) {
  if (!enabled(net, m, t)) throw FireDisabled(t.name);
  return madd(msub(m, t.pre), t.post);
}

NetLtsc net_to_ltsc(const PetriNet& net, size_t bound) {
  net.check_wellformed();
  NetLtsc out;
  Ltsc& l = out.lts;
  std::map<std::string, int> index;

  auto intern = [&](const Marking& m) {
    std::string key = marking_str(m);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (l.state_names.size() >= bound) throw BoundExceeded(bound);
    int id = static_cast<int>(l.state_names.size());
    index.emplace(key, id);
    l.state_names.push_back(std::move(key));
    out.markings.push_back(m);
    return id;
  };

  l.initial = intern(net.initial);
  l.outgoing.resize(1);
  std::deque<int> queue{l.initial};
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    Marking m = out.markings[s];
    for (size_t i = 0; i < net.transitions.size(); ++i) {
      const PTransition& nt = net.transitions[i];
      if (!enabled(net, m, nt)) continue;
      Marking next = fire(net, m, nt);
      size_t before = l.state_names.size();
      int tgt = intern(next);
      if (l.state_names.size() > before) {
        queue.push_back(tgt);
        l.outgoing.resize(l.state_names.size());
      }
      Transition t;
      t.id = static_cast<int>(l.transitions.size());
      t.source = s;
      t.label = nt.label;
      for (const auto& [p, cnt] : nt.pre) t.components.insert(p);
      for (const auto& [p, cnt] : nt.read) t.components.insert("~" + p);
      t.tags.insert(nt.name);
      t.target = tgt;
      l.outgoing[s].push_back(t.id);
      l.transitions.push_back(std::move(t));
      out.net_transition.push_back(static_cast<int>(i));
    }
  }

  // (M,t) smile-dot (M',u) iff (pre_t + read_t) disjoint from pre_u: firing u
  // consumes no token that t needs.
  size_t n = l.transitions.size();
  l.concurrent.assign(n, std::vector<bool>(n, false));
  for (size_t a = 0; a < n; ++a) {
    const PTransition& ta = net.transitions[out.net_transition[a]];
    Marking need = madd(ta.pre, ta.read);
    for (size_t b = 0; b < n; ++b) {
      const PTransition& tb = net.transitions[out.net_transition[b]];
      l.concurrent[a][b] = mmin(need, tb.pre).empty();
    }
  }
  l.spurious_any = mark_spurious(l, l.visible_labels());
  return out;
}

bool check_structural_conflict(const PetriNet& net, size_t bound) {
  net.check_wellformed();
  // Collect reachable markings first.
  std::vector<Marking> reach;
  std::set<std::string> seen;
  std::deque<Marking> queue{net.initial};
  seen.insert(marking_str(net.initial));
  while (!queue.empty()) {
    Marking m = queue.front();
    queue.pop_front();
    reach.push_back(m);
    if (reach.size() > bound) throw BoundExceeded(bound);
    for (const auto& t : net.transitions) {
      if (!enabled(net, m, t)) continue;
      Marking next = fire(net, m, t);
      if (seen.insert(marking_str(next)).second) queue.push_back(next);
    }
  }
  for (const auto& t : net.transitions) {
    Marking need_t = madd(t.pre, t.read);
    for (const auto& u : net.transitions) {
      if (mmin(need_t, u.pre).empty()) continue;  // only conflicting pairs constrained
      Marking combined = madd(need_t, u.pre);
      for (const auto& m : reach)
        if (mleq(combined, m) && mleq(u.read, m)) return false;
    }
  }
  return true;
}

PetriNet read_arcs_to_loops(const PetriNet& net) {
  PetriNet out = net;
  for (auto& t : out.transitions) {
    t.pre = madd(t.pre, t.read);
    t.post = madd(t.post, t.read);
    t.read.clear();
  }
  return out;
}

// ------------------------------------------------------------------ format

namespace {

struct PnetParser {
  std::istringstream in;
  int lineno = 0;

  explicit PnetParser(const std::string& src) : in(src) {}

  static std::vector<std::string> words(const std::string& line) {
    std::vector<std::string> out;
    std::string w;
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == ';' || c == ',') {
        if (!w.empty()) out.push_back(w), w.clear();
      } else {
        w += c;
      }
    }
    if (!w.empty()) out.push_back(w);
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lineno, 1);
  }

  PetriNet parse() {
    PetriNet net;
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto ws = words(line);
      if (ws.empty()) continue;
      if (ws[0] == "place") {
        // place NAME [init N]
        if (ws.size() < 2) fail("place needs a name");
        net.places.insert(ws[1]);
        if (ws.size() >= 4 && ws[2] == "init") net.initial[ws[1]] = std::stoi(ws[3]);
        else if (ws.size() != 2) fail("malformed place line");
      } else if (ws[0] == "trans") {
        // trans NAME [label ACT]
        if (ws.size() < 2) fail("trans needs a name");
        PTransition t;
        t.name = ws[1];
        if (ws.size() >= 4 && ws[2] == "label") {
          std::string a = ws[3];
          if (a == "tau") t.label = ActionLabel::tau();
          else if (a == "t") t.label = ActionLabel::timeout();
          else if (a[0] == '\'') t.label = ActionLabel::mk_coname(a.substr(1));
          else t.label = ActionLabel::mk_name(a);
        } else if (ws.size() != 2) {
          fail("malformed trans line");
        }
        net.transitions.push_back(std::move(t));
      } else if (ws[0] == "arc" || ws[0] == "read") {
        // arc A -> B [* N]   |   read S -- T [* N]
        bool is_read = ws[0] == "read";
        const char* sep = is_read ? "--" : "->";
        if (ws.size() < 4 || ws[2] != sep) fail(std::string("expected '") + sep + "'");
        int mult = 1;
        if (ws.size() == 6 && ws[4] == "*") mult = std::stoi(ws[5]);
        else if (ws.size() != 4) fail("malformed arc line");
        const std::string &a = ws[1], &b = ws[3];
        if (is_read) {
          int ti = -1;
          for (size_t i = 0; i < net.transitions.size(); ++i)
            if (net.transitions[i].name == b) ti = static_cast<int>(i);
          if (ti < 0 || !net.places.count(a)) fail("read arc must be 'read PLACE -- TRANS'");
          net.transitions[ti].read[a] += mult;
        } else if (net.places.count(a)) {
          int ti = net.transition_index(b);
          if (ti < 0) fail("unknown transition '" + b + "'");
          net.transitions[ti].pre[a] += mult;
        } else {
          int ti = net.transition_index(a);
          if (ti < 0 || !net.places.count(b)) fail("arc endpoints must be a place and a transition");
          net.transitions[ti].post[b] += mult;
        }
      } else {
        fail("unknown directive '" + ws[0] + "'");
      }
    }
    net.check_wellformed();
    return net;
  }
};

}  // namespace

PetriNet parse_pnet(const std::string& source) {
  PnetParser p(source);
  return p.parse();
}

std::string print_pnet(const PetriNet& net) {
  std::ostringstream os;
  for (const auto& p : net.places) {
    os << "place " << p;
    auto it = net.initial.find(p);
    if (it != net.initial.end()) os << " init " << it->second;
    os << ";\n";
  }
  for (const auto& t : net.transitions) {
    os << "trans " << t.name;
    if (!t.label.is_tau()) os << " label " << t.label.str();
    os << ";\n";
    for (const auto& [p, n] : t.pre) {
      os << "arc " << p << " -> " << t.name;
      if (n != 1) os << " * " << n;
      os << ";\n";
    }
    for (const auto& [p, n] : t.post) {
      os << "arc " << t.name << " -> " << p;
      if (n != 1) os << " * " << n;
      os << ";\n";
    }
    for (const auto& [p, n] : t.read) {
      os << "read " << p << " -- " << t.name;
      if (n != 1) os << " * " << n;
      os << ";\n";
    }
  }
  return os.str();
}

}  // namespace ccst
