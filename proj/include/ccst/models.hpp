#pragma once

#include <variant>

#include "ccst/checker.hpp"
#include "ccst/parse.hpp"
#include "ccst/petri.hpp"

namespace ccst {

// Built-in catalog: every named model from the requirements study, stored as
// a .ccst / .pnet asset.
struct BuiltinModel {
  std::string name;
  std::variant<Model, PetriNet> content;

  bool is_net() const { return std::holds_alternative<PetriNet>(content); }
  const Model& ccs() const { return std::get<Model>(content); }
  const PetriNet& net() const { return std::get<PetriNet>(content); }
};

const std::map<std::string, std::string>& asset_texts();  // generated

std::vector<std::string> builtin_names();
BuiltinModel builtin(const std::string& name);
Ltsc builtin_ltsc(const std::string& name, size_t bound = 100000);

// One correctness requirement instantiated for process index i (and j),
// carrying the blocking-action policy it is checked under.
struct RequirementSpec {
  std::string name;
  FormulaId formula = -1;
  std::set<std::string> blocking;
  bool safety = false;
  bool criterion_parameterized = false;
};

// Names: ME1..ME6 with action families ln_i/ec_i/lc_i/en_i, and FS1, FS2,
// FS3p, FS4 with r<i>/t<i>/e.  `indices` lists all process indices of the
// model (for the blocking set and the act_i disjunction).
RequirementSpec requirement(FormulaStore& store, const std::string& name, const std::string& i,
                            const std::string& j, const std::vector<std::string>& indices);

// The E_l of reactive judgements with time-outs: B plus the
// leave-critical-section actions.
std::set<std::string> me_default_E(const std::vector<std::string>& indices);

// (I1 | F[f] | I2) \ {c1,c2} with I_i = r_i.'c_i.I_i and f(r_i) = c_i.
Model wrap_fs_interface(const Model& f);

// (I1 | P[f] | I2) \ {c1,c2,d1,d2} with I_i = ln_i.'c_i.'d_i.en_i.I_i and
// f(ln_i) = c_i, f(en_i) = d_i.  The 'c_i prefixes carry @c_i tags so the
// handshake can serve as a fairness task.
Model wrap_me_interface(const Model& p, const std::vector<std::string>& indices);

}  // namespace ccst
