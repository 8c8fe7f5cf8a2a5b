#pragma once

#include "ccst/formula.hpp"
#include "ccst/kripke.hpp"
#include "ccst/ltsc.hpp"

namespace ccst {

struct Criterion {
  enum class Kind { Top, Progress, Justness, WeakFair, StrongFair };
  Kind kind = Kind::Progress;
  std::vector<TaskDef> tasks;  // WF/SF only

  static Criterion top() { return {Kind::Top, {}}; }
  static Criterion progress() { return {Kind::Progress, {}}; }
  static Criterion justness() { return {Kind::Justness, {}}; }
  static Criterion weak_fair(std::vector<TaskDef> t) { return {Kind::WeakFair, std::move(t)}; }
  static Criterion strong_fair(std::vector<TaskDef> t) { return {Kind::StrongFair, std::move(t)}; }

  std::string str() const;
};

// A run of the LTS: a finite path, or an ultimately periodic path when
// cycle is nonempty.  Both parts are transition id sequences; the cycle
// returns to its own first source.
struct Run {
  std::vector<int> stem;
  std::vector<int> cycle;

  bool finite() const { return cycle.empty(); }
};

// States visited: start, then target of each stem/cycle transition.
std::vector<int> run_states(const Ltsc& l, const Run& r, int start);

// All outgoing transitions of s carry labels from B (so tau, timeout or a
// non-blocked visible action would allow the run to continue).
bool b_deadlocked(const Ltsc& l, const std::set<std::string>& B, int state);

// No E-spurious transition occurs on the run.
bool potentially_e_complete(const Ltsc& l, const std::set<int>& e_spurious, const Run& r);

// The definitional completeness predicate: (a) potentially E-complete,
// (b) finite runs end B-deadlocked (except under the trivial criterion),
// (c) infinite runs satisfy the criterion (B-justness via the concurrency
// relation, weak/strong B-fairness via the task set).
bool run_complete(const Ltsc& l, const std::set<std::string>& B, const std::set<int>& e_spurious,
                  const Criterion& cc, const Run& r, int start);

// DV view of a run: tau/timeout steps contribute one position, visible
// steps two (the halfway position satisfies the action label).
PropPath run_props(const Ltsc& l, const Run& r, int start);

}  // namespace ccst
