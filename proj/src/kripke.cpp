#include "ccst/kripke.hpp"

#include <algorithm>

namespace ccst {

KripkeStructure lts_to_kripke(const Ltsc& l) {
  KripkeStructure k;
  size_t ns = l.num_states();
  k.val.resize(ns);
  k.succ.resize(ns);
  k.state_origin.resize(ns);
  k.trans_origin.assign(ns, -1);
  k.names.resize(ns);
  for (size_t s = 0; s < ns; ++s) {
    k.state_origin[s] = static_cast<int>(s);
    k.names[s] = "s" + std::to_string(s);
  }
  k.initial = l.initial;
  for (const auto& t : l.transitions) {
    if (t.label.is_visible()) {
      int mid = static_cast<int>(k.val.size());
      k.val.push_back({t.label.str()});
      k.succ.emplace_back();
      k.state_origin.push_back(-1);
      k.trans_origin.push_back(t.id);
      k.names.push_back("<" + std::to_string(t.id) + ">");
      k.succ[t.source].push_back(mid);
      k.succ[mid].push_back(t.target);
    } else {
      k.succ[t.source].push_back(t.target);
    }
  }
  for (auto& v : k.succ) std::sort(v.begin(), v.end());
  return k;
}

std::vector<TaskDef> default_tasks(const Ltsc& l) {
  std::map<std::string, std::set<int>> by_label, by_tag;
  for (const auto& t : l.transitions) {
    by_label[t.label.str()].insert(t.id);
    for (const auto& tag : t.tags) by_tag[tag].insert(t.id);
  }
  std::vector<TaskDef> out;
  for (auto& [label, ids] : by_label) out.push_back({"label:" + label, std::move(ids)});
  for (auto& [tag, ids] : by_tag) out.push_back({"tag:" + tag, std::move(ids)});
  return out;
}

namespace {

bool task_b_enabled(const Ltsc& l, const std::set<std::string>& B, const TaskDef& task, int state) {
  for (int tid : l.outgoing[state]) {
    const auto& t = l.transitions[tid];
    if (!task.transitions.count(tid)) continue;
    if (t.label.is_visible() && B.count(t.label.str())) continue;
    return true;
  }
  return false;
}

}  // namespace

KripkeStructure instrument(const Ltsc& l, const std::set<std::string>& B,
                           const std::set<std::string>& E, const std::vector<TaskDef>& tasks) {
  std::set<int> dropped = mark_spurious(l, E);

  KripkeStructure k;
  size_t ns = l.num_states();
  k.val.resize(ns);
  k.succ.resize(ns);
  k.state_origin.resize(ns);
  k.trans_origin.assign(ns, -1);
  k.names.resize(ns);
  k.initial = l.initial;
  for (size_t s = 0; s < ns; ++s) {
    k.state_origin[s] = static_cast<int>(s);
    k.names[s] = "s" + std::to_string(s);
  }

  auto nonblocked = [&](const Transition& t) {
    return !(t.label.is_visible() && B.count(t.label.str()));
  };

  // State propositions: task enabledness and per-transition enabledness.
  for (size_t s = 0; s < ns; ++s) {
    for (const auto& task : tasks)
      if (task_b_enabled(l, B, task, static_cast<int>(s))) k.val[s].insert(en_task_atom(task.name));
    for (int tid : l.outgoing[s]) {
      const auto& t = l.transitions[tid];
      if (nonblocked(t)) k.val[s].insert(en_tr_atom(tid));
    }
  }

  // A halfway state for every non-dropped transition, tau included.
  for (const auto& t : l.transitions) {
    if (dropped.count(t.id)) continue;
    int mid = static_cast<int>(k.val.size());
    std::set<std::string> v;
    v.insert("tr");
    if (t.label.is_visible()) v.insert(t.label.str());
    for (const auto& task : tasks) {
      if (task.transitions.count(t.id)) v.insert(oc_task_atom(task.name));
      if (task_b_enabled(l, B, task, t.source) && task_b_enabled(l, B, task, t.target))
        v.insert(en_task_atom(task.name));
    }
    for (const auto& u : l.transitions)
      if (!l.conc(u.id, t.id) && nonblocked(u)) v.insert(interfere_atom(u.id));
    k.val.push_back(std::move(v));
    k.succ.emplace_back();
    k.state_origin.push_back(-1);
    k.trans_origin.push_back(t.id);
    k.names.push_back("<" + std::to_string(t.id) + ">");
    k.succ[t.source].push_back(mid);
    k.succ[mid].push_back(t.target);
  }

  // Self-loop at every state.
  for (size_t s = 0; s < k.succ.size(); ++s) k.succ[s].push_back(static_cast<int>(s));
  for (auto& v : k.succ) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return k;
}

StateLasso embed_infinite(const KripkeStructure& khat, const std::vector<int>& finite_path) {
  if (finite_path.empty()) throw std::invalid_argument("embed_infinite: empty path");
  StateLasso lasso;
  lasso.stem.assign(finite_path.begin(), finite_path.end() - 1);
  lasso.cycle = {finite_path.back()};
  (void)khat;
  return lasso;
}

PropPath lasso_props(const KripkeStructure& k, const StateLasso& lasso) {
  PropPath p;
  for (int s : lasso.stem) p.stem.push_back(k.val[s]);
  for (int s : lasso.cycle) p.cycle.push_back(k.val[s]);
  return p;
}

PropPath finite_props(const KripkeStructure& k, const std::vector<int>& path) {
  PropPath p;
  for (int s : path) p.stem.push_back(k.val[s]);
  return p;
}

}  // namespace ccst
