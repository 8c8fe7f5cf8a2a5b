#include "ccst/checker.hpp"
#include "ccst/models.hpp"

#include <algorithm>
#include <cctype>

namespace ccst {

namespace {

std::vector<std::string> detect_indices(const Ltsc& l, Role role) {
  std::set<std::string> idx;
  std::string prefix = role == Role::Mutex ? "ln_" : "r";
  for (const auto& label : l.visible_labels()) {
    if (label.rfind(prefix, 0) == 0 && label.size() > prefix.size())
      idx.insert(label.substr(prefix.size()));
  }
  if (role == Role::FairScheduler) {
    // only rN with a matching tN counts as a request channel
    std::set<std::string> out;
    for (const auto& i : idx)
      if (std::isdigit(static_cast<unsigned char>(i[0]))) out.insert(i);
    idx = out;
  }
  return {idx.begin(), idx.end()};
}

bool req_holds(const Ltsc& l, FormulaStore& store, const RequirementSpec& spec,
               const Criterion& cc) {
  Judgement j;
  j.model = &l;
  j.B = spec.blocking;
  j.E = l.visible_labels();
  j.cc = cc;
  j.phi = spec.formula;
  j.store = &store;
  return complete_paths_semantics(j).holds;
}

}  // namespace

HierarchyResult classify_hierarchy(const Ltsc& l, FormulaStore& store, Role role) {
  HierarchyResult res;
  std::vector<std::string> indices = detect_indices(l, role);
  if (indices.empty()) {
    res.notes.push_back("no process indices recognised");
    return res;
  }

  auto all_hold = [&](const std::string& req, const Criterion& cc) {
    if (req == "ME2") {
      for (const auto& i : indices)
        for (const auto& j : indices) {
          if (i == j) continue;
          if (!req_holds(l, store, requirement(store, req, i, j, indices), cc)) return false;
        }
      return true;
    }
    for (const auto& i : indices)
      if (!req_holds(l, store, requirement(store, req, i, i, indices), cc)) return false;
    return true;
  };

  const Criterion pr = Criterion::progress();
  if (role == Role::Mutex) {
    res.safety_ok = all_hold("ME1", pr) && (indices.size() < 2 || all_hold("ME2", pr));
  } else {
    res.safety_ok = all_hold("FS3p", pr) && all_hold("FS4", pr);
  }
  if (!res.safety_ok) {
    res.notes.push_back("safety requirements fail; liveness axes not classified");
    return res;
  }

  std::vector<std::pair<std::string, Criterion>> ladder = {
      {"Pr", Criterion::progress()},
      {"J", Criterion::justness()},
      {"WF", Criterion::weak_fair(default_tasks(l))},
      {"SF", Criterion::strong_fair(default_tasks(l))},
  };
  std::string req_request = role == Role::Mutex ? "ME6" : "FS1";
  std::string req_granting = role == Role::Mutex ? "ME3" : "FS2";
  for (const auto& [name, cc] : ladder)
    if (all_hold(req_request, cc)) {
      res.request = name;
      break;
    }
  for (const auto& [name, cc] : ladder)
    if (all_hold(req_granting, cc)) {
      res.granting = name;
      break;
    }
  return res;
}

}  // namespace ccst
