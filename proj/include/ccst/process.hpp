#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccst/action.hpp"

namespace ccst {

struct Process;
using ProcessPtr = std::shared_ptr<const Process>;

// One summand of a guarded choice: alpha[@tag].P
struct Prefix {
  ActionLabel action;
  std::optional<std::string> tag;
  ProcessPtr continuation;
};

struct Process {
  enum class Kind { Choice, Parallel, Restrict, Relabel, Ident };
  Kind kind = Kind::Choice;

  std::vector<Prefix> branches;               // Choice (empty == nil)
  ProcessPtr left, right;                     // Parallel
  ProcessPtr child;                           // Restrict / Relabel
  std::set<std::string> restricted;           // Restrict
  std::map<std::string, std::string> relabel; // Relabel, name -> name
  std::string ident;                          // Ident

  static ProcessPtr nil();
  static ProcessPtr choice(std::vector<Prefix> branches);
  static ProcessPtr parallel(ProcessPtr l, ProcessPtr r);
  static ProcessPtr restrict(ProcessPtr p, std::set<std::string> names);
  static ProcessPtr relabelling(ProcessPtr p, std::map<std::string, std::string> f);
  static ProcessPtr identifier(std::string name);
};

struct Definitions {
  std::map<std::string, ProcessPtr> defs;
  std::set<std::string> signals;
};

// Faithful concrete-syntax rendering; parse(pretty_print(p)) == p.
std::string pretty_print(const ProcessPtr& p);

// Deterministic key with choice summands sorted; used for state identity.
std::string canonical(const ProcessPtr& p);

bool structurally_equal(const ProcessPtr& a, const ProcessPtr& b);

// Applies a relabelling map to a label (names extend to conames, tau and t
// are fixed points).
ActionLabel apply_relabelling(const std::map<std::string, std::string>& f, const ActionLabel& a);

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg, std::vector<std::string> issues = {})
      : std::runtime_error(msg), issues(std::move(issues)) {}
  std::vector<std::string> issues;
};

// Checks that all identifiers are bound, recursion is guarded, and every
// declared signal only labels coname prefixes that are syntactic self-loops
// at their defining identifier.  Collects all violations before throwing.
void validate(const Definitions& defs, const ProcessPtr& root);

}  // namespace ccst
