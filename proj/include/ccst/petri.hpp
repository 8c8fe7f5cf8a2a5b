#pragma once

#include "ccst/ltsc.hpp"

namespace ccst {

// Multisets of places as sparse maps; entries are strictly positive.
using Marking = std::map<std::string, int>;

Marking madd(const Marking& a, const Marking& b);
Marking msub(const Marking& a, const Marking& b);  // truncated at 0
Marking mmin(const Marking& a, const Marking& b);  // pointwise min
bool mleq(const Marking& a, const Marking& b);
std::string marking_str(const Marking& m);

struct PTransition {
  std::string name;
  ActionLabel label = ActionLabel::tau();
  Marking pre;   // consumed
  Marking post;  // produced
  Marking read;  // required but not consumed (read arcs)
};

struct FireDisabled : std::runtime_error {
  explicit FireDisabled(const std::string& t)
      : std::runtime_error("transition '" + t + "' is not enabled") {}
};

struct PetriNet {
  std::set<std::string> places;
  std::vector<PTransition> transitions;
  Marking initial;

  // Every transition needs a preplace, and F(s,t) > 0 forbids R(s,t) > 0.
  void check_wellformed() const;

  const PTransition& transition(const std::string& name) const;
  int transition_index(const std::string& name) const;
};

bool enabled(const PetriNet& net, const Marking& m, const PTransition& t);
Marking fire(const PetriNet& net, const Marking& m, const PTransition& t);

// Reachability graph as an LTSC.  States are reachable markings in discovery
// order; the concurrency relation is (pre_t + read_t) disjoint from pre_u,
// which read arcs can make asymmetric.  Transition components are reused to
// carry preplace/read-place names so the exported relation stays inspectable.
struct NetLtsc {
  Ltsc lts;
  std::vector<Marking> markings;
  std::vector<int> net_transition;  // per LTS transition, index into net.transitions
};

NetLtsc net_to_ltsc(const PetriNet& net, size_t bound = 100000);

// True iff every pair t,u with (pre_t + read_t) meeting pre_u can never be
// granted combined tokens under any reachable marking.
bool check_structural_conflict(const PetriNet& net, size_t bound = 100000);

// Replaces every read arc by a consume/produce loop.
PetriNet read_arcs_to_loops(const PetriNet& net);

PetriNet parse_pnet(const std::string& source);
std::string print_pnet(const PetriNet& net);

}  // namespace ccst
