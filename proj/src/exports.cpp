#include "ccst/exports.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace ccst {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string ltsc_to_dot(const Ltsc& l, const std::set<std::string>* E) {
  std::set<int> e_spurious = E ? mark_spurious(l, *E) : std::set<int>{};
  std::ostringstream os;
  os << "digraph ltsc {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  os << "  init [shape=point];\n  init -> s" << l.initial << ";\n";
  for (size_t s = 0; s < l.num_states(); ++s)
    os << "  s" << s << " [label=\"" << s << "\", tooltip=\"" << dot_escape(l.state_names[s])
       << "\"];\n";
  for (const auto& t : l.transitions) {
    os << "  s" << t.source << " -> s" << t.target << " [label=\"" << dot_escape(t.label.str());
    if (!t.tags.empty()) {
      os << "@";
      bool first = true;
      for (const auto& tag : t.tags) {
        if (!first) os << ",";
        first = false;
        os << tag;
      }
    }
    os << "\"";
    if (l.spurious_any.count(t.id))
      os << ", style=dotted";
    else if (e_spurious.count(t.id))
      os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json ltsc_to_json(const Ltsc& l) {
  nlohmann::ordered_json j;
  j["initial"] = l.initial;
  j["states"] = nlohmann::ordered_json::array();
  for (size_t s = 0; s < l.num_states(); ++s)
    j["states"].push_back({{"id", s}, {"term", l.state_names[s]}});
  j["transitions"] = nlohmann::ordered_json::array();
  for (const auto& t : l.transitions) {
    nlohmann::ordered_json tj;
    tj["id"] = t.id;
    tj["source"] = t.source;
    tj["label"] = t.label.str();
    tj["components"] = t.components;
    tj["tags"] = t.tags;
    tj["target"] = t.target;
    j["transitions"].push_back(std::move(tj));
  }
  j["concurrent"] = nlohmann::ordered_json::array();
  for (size_t a = 0; a < l.transitions.size(); ++a)
    for (size_t b = 0; b < l.transitions.size(); ++b)
      if (l.concurrent[a][b]) j["concurrent"].push_back({a, b});
  j["spurious"] = l.spurious_any;
  return j;
}

std::string kripke_to_dot(const KripkeStructure& k) {
  std::ostringstream os;
  os << "digraph kripke {\n  rankdir=LR;\n  node [shape=box, fontsize=10];\n";
  os << "  init [shape=point];\n  init -> n" << k.initial << ";\n";
  for (size_t s = 0; s < k.size(); ++s) {
    std::string label = k.names[s];
    if (!k.val[s].empty()) {
      label += "\\n{";
      bool first = true;
      for (const auto& a : k.val[s]) {
        if (!first) label += ",";
        first = false;
        label += a;
      }
      label += "}";
    }
    os << "  n" << s << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (size_t s = 0; s < k.size(); ++s)
    for (int to : k.succ[s]) os << "  n" << s << " -> n" << to << ";\n";
  os << "}\n";
  return os.str();
}

std::string pnet_to_dot(const PetriNet& net) {
  std::ostringstream os;
  os << "digraph pnet {\n  rankdir=LR;\n";
  for (const auto& p : net.places) {
    os << "  \"" << dot_escape(p) << "\" [shape=circle, fontsize=9";
    auto it = net.initial.find(p);
    if (it != net.initial.end() && it->second > 0) os << ", xlabel=\"" << it->second << "\"";
    os << "];\n";
  }
  for (const auto& t : net.transitions) {
    os << "  \"" << dot_escape(t.name) << "\" [shape=box, fontsize=9, label=\""
       << dot_escape(t.name + (t.label.is_tau() ? "" : " : " + t.label.str())) << "\"];\n";
    for (const auto& [p, n] : t.pre) {
      os << "  \"" << dot_escape(p) << "\" -> \"" << dot_escape(t.name) << "\"";
      if (n != 1) os << " [label=\"" << n << "\"]";
      os << ";\n";
    }
    for (const auto& [p, n] : t.post) {
      os << "  \"" << dot_escape(t.name) << "\" -> \"" << dot_escape(p) << "\"";
      if (n != 1) os << " [label=\"" << n << "\"]";
      os << ";\n";
    }
    for (const auto& [p, n] : t.read)
      os << "  \"" << dot_escape(p) << "\" -> \"" << dot_escape(t.name)
         << "\" [dir=none, style=bold];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json run_to_json(const Ltsc& l, const Run& run) {
  auto step = [&](int tid) {
    const auto& t = l.transitions[tid];
    return nlohmann::ordered_json{{"transition", tid},
                                  {"label", t.label.str()},
                                  {"source", t.source},
                                  {"target", t.target}};
  };
  nlohmann::ordered_json j;
  j["type"] = run.finite() ? "finite" : "lasso";
  j["stem"] = nlohmann::ordered_json::array();
  for (int t : run.stem) j["stem"].push_back(step(t));
  if (!run.finite()) {
    j["cycle"] = nlohmann::ordered_json::array();
    for (int t : run.cycle) j["cycle"].push_back(step(t));
  }
  return j;
}

}  // namespace ccst
