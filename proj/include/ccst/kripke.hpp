#pragma once

#include <optional>

#include "ccst/formula.hpp"
#include "ccst/ltsc.hpp"

namespace ccst {

// Kripke structure with string-atom valuations.  Totality is not required.
// Origin maps relate Kripke states back to LTS states and transitions so
// counterexamples can be reported in LTS terms.
struct KripkeStructure {
  std::vector<std::set<std::string>> val;
  std::vector<std::vector<int>> succ;
  int initial = 0;
  std::vector<int> state_origin;  // -1 when the state stems from a transition
  std::vector<int> trans_origin;  // -1 when the state stems from an LTS state
  std::vector<std::string> names;

  size_t size() const { return val.size(); }
};

// De Nicola-Vaandrager translation: a fresh state halfway along every
// visible transition, labelled with the action; tau and timeout transitions
// become direct edges.
KripkeStructure lts_to_kripke(const Ltsc& l);

struct TaskDef {
  std::string name;
  std::set<int> transitions;
};

// One task per action label ("label:a") plus one per tag ("tag:l2").
std::vector<TaskDef> default_tasks(const Ltsc& l);

// The hat-Kripke structure of the standard-LTL translation: a halfway state
// for every transition (tau included), a self-loop at every state, and the
// tr / en$T / oc$T / en#t / int#t propositions.  Transitions that are
// E-spurious are omitted, since no complete path may use them.
KripkeStructure instrument(const Ltsc& l, const std::set<std::string>& B,
                           const std::set<std::string>& E, const std::vector<TaskDef>& tasks);

// A lasso of Kripke states: stem then cycle repeated forever.
struct StateLasso {
  std::vector<int> stem;   // may be empty
  std::vector<int> cycle;  // nonempty; last state links back to first
};

// pi^infty: append the final self-loop as a cycle.  The input must be a path
// of an instrumented structure (every state has a self-loop).  Lassos are
// returned unchanged via the overload.
StateLasso embed_infinite(const KripkeStructure& khat, const std::vector<int>& finite_path);
inline StateLasso embed_infinite(const KripkeStructure&, StateLasso lasso) { return lasso; }

PropPath lasso_props(const KripkeStructure& k, const StateLasso& lasso);
PropPath finite_props(const KripkeStructure& k, const std::vector<int>& path);

}  // namespace ccst
