#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ccst/process.hpp"

namespace ccst {

// The leaf prefix a derivation used at one component path.  Needed for the
// signal-adjusted concurrency relation: a reading synchronisation does not
// interfere with a write when its register-side contribution is a signal
// emission self-loop.
struct Contribution {
  std::string component;       // word over {L,R}
  ActionLabel leaf_action;     // after enclosing relabellings
  bool register_selfloop = false;

  friend bool operator<(const Contribution& a, const Contribution& b) {
    return std::tie(a.component, a.leaf_action, a.register_selfloop) <
           std::tie(b.component, b.leaf_action, b.register_selfloop);
  }
};

struct DerivedStep {
  ActionLabel label;
  std::set<std::string> components;
  std::set<std::string> tags;
  ProcessPtr target;
  std::vector<Contribution> contributions;
};

struct Transition {
  int id = -1;
  int source = -1;
  ActionLabel label;
  std::set<std::string> components;
  std::set<std::string> tags;
  int target = -1;
  std::vector<Contribution> contributions;
};

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(size_t bound)
      : std::runtime_error("state bound of " + std::to_string(bound) + " exceeded"),
        bound(bound) {}
  size_t bound;
};

// Finite labelled transition system with concurrency relation; states are
// canonical terms (or net markings).  Immutable once built.
struct Ltsc {
  std::vector<std::string> state_names;
  std::vector<Transition> transitions;
  std::vector<std::vector<int>> outgoing;  // per state, ids sorted
  int initial = 0;

  // concurrent[t][u] holds iff t smile-dot u (u does not interfere with t).
  // May be asymmetric.
  std::vector<std::vector<bool>> concurrent;

  std::set<int> spurious_any;  // timeout transitions with a tau sibling

  size_t num_states() const { return state_names.size(); }

  bool conc(int t, int u) const { return concurrent[t][u]; }

  // All visible labels occurring in the system, as strings ("a" or "'a").
  std::set<std::string> visible_labels() const;

  bool has_timeouts() const;
};

// All Table-1 conclusions for one term.
std::vector<DerivedStep> derive_transitions(const Definitions& defs, const ProcessPtr& p);

// Breadth-first closure from the root; deterministic numbering.  Throws
// BoundExceeded when the reachable set is larger than `bound`.  Computes the
// default concurrency relation and the spurious marking.
Ltsc explore(const Definitions& defs, const ProcessPtr& root, size_t bound = 100000);

// Concurrency relation: default rule plus the signal adjustment when
// `signals` is nonempty.  Result may be asymmetric.
std::vector<std::vector<bool>> concurrency(const Ltsc& l, const std::set<std::string>& signals);

// Timeout transitions whose source also offers a label in (A\E) u {tau}.
// E is given as visible-label strings.  With E = A this is spurious_any.
std::set<int> mark_spurious(const Ltsc& l, const std::set<std::string>& E);

// Checks property (2) of the LTSC definition exhaustively; returns
// human-readable violation descriptions (empty when the property holds).
std::vector<std::string> check_closure_property(const Ltsc& l);

}  // namespace ccst
