#include "ccst/completeness.hpp"

#include <algorithm>

namespace ccst {

std::string Criterion::str() const {
  switch (kind) {
    case Kind::Top: return "top";
    case Kind::Progress: return "pr";
    case Kind::Justness: return "j";
    case Kind::WeakFair: return "wf";
    case Kind::StrongFair: return "sf";
  }
  return "?";
}

std::vector<int> run_states(const Ltsc& l, const Run& r, int start) {
  std::vector<int> states{start};
  for (int t : r.stem) states.push_back(l.transitions[t].target);
  for (int t : r.cycle) states.push_back(l.transitions[t].target);
  return states;
}

bool b_deadlocked(const Ltsc& l, const std::set<std::string>& B, int state) {
  for (int tid : l.outgoing[state]) {
    const auto& t = l.transitions[tid];
    if (!t.label.is_visible()) return false;
    if (!B.count(t.label.str())) return false;
  }
  return true;
}

bool potentially_e_complete(const Ltsc& l, const std::set<int>& e_spurious, const Run& r) {
  (void)l;
  for (int t : r.stem)
    if (e_spurious.count(t)) return false;
  for (int t : r.cycle)
    if (e_spurious.count(t)) return false;
  return true;
}

namespace {

bool nonblocked(const Ltsc& l, const std::set<std::string>& B, int tid) {
  const auto& t = l.transitions[tid];
  return !(t.label.is_visible() && B.count(t.label.str()));
}

// B-justness of a finite run: every non-blocked transition enabled at a
// visited state must be interfered with by some later transition of the run
// (taking the transition itself counts, by irreflexivity).
bool finite_just(const Ltsc& l, const std::set<std::string>& B, const Run& r, int start) {
  std::vector<int> states = run_states(l, r, start);
  for (size_t i = 0; i < states.size(); ++i) {
    for (int tid : l.outgoing[states[i]]) {
      if (!nonblocked(l, B, tid)) continue;
      bool discharged = false;
      for (size_t j = i; j < r.stem.size(); ++j) {
        if (!l.conc(tid, r.stem[j])) {
          discharged = true;
          break;
        }
      }
      if (!discharged) return false;
    }
  }
  return true;
}

bool lasso_just(const Ltsc& l, const std::set<std::string>& B, const Run& r, int start) {
  std::vector<int> states = run_states(l, r, start);
  auto occurs_from = [&](int tid, size_t pos) {
    for (size_t j = pos; j < r.stem.size(); ++j)
      if (!l.conc(tid, r.stem[j])) return true;
    for (int u : r.cycle)
      if (!l.conc(tid, u)) return true;
    return false;
  };
  for (size_t i = 0; i < states.size(); ++i) {
    size_t from = std::min(i, r.stem.size());
    for (int tid : l.outgoing[states[i]])
      if (nonblocked(l, B, tid) && !occurs_from(tid, from)) return false;
  }
  return true;
}

bool task_b_enabled_at(const Ltsc& l, const std::set<std::string>& B, const TaskDef& task,
                       int state) {
  for (int tid : l.outgoing[state])
    if (task.transitions.count(tid) && nonblocked(l, B, tid)) return true;
  return false;
}

// Weak B-fairness of a lasso reduces to its cycle: a task perpetually
// B-enabled on some suffix is enabled at every cycle state in particular.
bool lasso_weak_fair(const Ltsc& l, const std::set<std::string>& B,
                     const std::vector<TaskDef>& tasks, const Run& r, int start) {
  std::vector<int> states = run_states(l, r, start);
  std::vector<int> cycle_states(states.begin() + r.stem.size(), states.end() - 1);
  if (cycle_states.empty()) cycle_states.push_back(states[r.stem.size()]);
  for (const auto& task : tasks) {
    bool everywhere = true;
    for (int s : cycle_states)
      if (!task_b_enabled_at(l, B, task, s)) {
        everywhere = false;
        break;
      }
    if (!everywhere) continue;
    bool occurs = false;
    for (int t : r.cycle)
      if (task.transitions.count(t)) {
        occurs = true;
        break;
      }
    if (!occurs) return false;
  }
  return true;
}

bool lasso_strong_fair(const Ltsc& l, const std::set<std::string>& B,
                       const std::vector<TaskDef>& tasks, const Run& r, int start) {
  std::vector<int> states = run_states(l, r, start);
  std::vector<int> cycle_states(states.begin() + r.stem.size(), states.end() - 1);
  if (cycle_states.empty()) cycle_states.push_back(states[r.stem.size()]);
  for (const auto& task : tasks) {
    bool somewhere = false;
    for (int s : cycle_states)
      if (task_b_enabled_at(l, B, task, s)) {
        somewhere = true;
        break;
      }
    if (!somewhere) continue;
    bool occurs = false;
    for (int t : r.cycle)
      if (task.transitions.count(t)) {
        occurs = true;
        break;
      }
    if (!occurs) return false;
  }
  return true;
}

}  // namespace

bool run_complete(const Ltsc& l, const std::set<std::string>& B, const std::set<int>& e_spurious,
                  const Criterion& cc, const Run& r, int start) {
  if (!potentially_e_complete(l, e_spurious, r)) return false;
  if (r.finite()) {
    if (cc.kind == Criterion::Kind::Top) return true;
    std::vector<int> states = run_states(l, r, start);
    if (!b_deadlocked(l, B, states.back())) return false;
    if (cc.kind == Criterion::Kind::Justness) return finite_just(l, B, r, start);
    // Progress and weak/strong fairness impose nothing further on finite
    // B-deadlocked runs: no task is B-enabled at the final state, so the
    // fairness clauses hold vacuously.
    return true;
  }
  switch (cc.kind) {
    case Criterion::Kind::Top:
    case Criterion::Kind::Progress: return true;
    case Criterion::Kind::Justness: return lasso_just(l, B, r, start);
    case Criterion::Kind::WeakFair: return lasso_weak_fair(l, B, cc.tasks, r, start);
    case Criterion::Kind::StrongFair: return lasso_strong_fair(l, B, cc.tasks, r, start);
  }
  return false;
}

PropPath run_props(const Ltsc& l, const Run& r, int start) {
  (void)start;
  PropPath p;
  auto emit = [&](std::vector<std::set<std::string>>& out, int tid, bool with_state_after) {
    const auto& t = l.transitions[tid];
    if (t.label.is_visible()) out.push_back({t.label.str()});
    if (with_state_after) out.push_back({});
  };
  p.stem.push_back({});  // the start state
  for (size_t i = 0; i < r.stem.size(); ++i) emit(p.stem, r.stem[i], true);
  if (!r.cycle.empty()) {
    // The start state of the cycle is the last stem position; move it into
    // the cycle so the loop closes correctly.
    p.cycle.push_back(p.stem.back());
    p.stem.pop_back();
    for (size_t i = 0; i < r.cycle.size(); ++i)
      emit(p.cycle, r.cycle[i], i + 1 < r.cycle.size());
  }
  return p;
}

}  // namespace ccst
