#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "ccst/checker.hpp"
#include "ccst/kripke.hpp"
#include "ccst/petri.hpp"

namespace ccst {

// DOT rendering of an LTSC; spurious time-out transitions are drawn dotted
// and E-spurious ones dashed (pass E to opt in).
std::string ltsc_to_dot(const Ltsc& l, const std::set<std::string>* E = nullptr);

// JSON with fields states / transitions / concurrent / spurious.
nlohmann::ordered_json ltsc_to_json(const Ltsc& l);

std::string kripke_to_dot(const KripkeStructure& k);

// Read arcs are drawn as lines without arrow heads.
std::string pnet_to_dot(const PetriNet& net);

nlohmann::ordered_json run_to_json(const Ltsc& l, const Run& run);

}  // namespace ccst
