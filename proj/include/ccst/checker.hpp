#pragma once

#include <optional>

#include "ccst/completeness.hpp"

namespace ccst {

struct Judgement {
  const Ltsc* model = nullptr;
  std::set<std::string> B;
  std::set<std::string> E;  // B subset of E subset of A; only meaningful with timeouts
  Criterion cc;
  FormulaId phi = -1;
  FormulaStore* store = nullptr;
};

struct Verdict {
  bool holds = true;
  std::optional<Run> counterexample;
  bool exhaustive = true;  // oracle only: false when bounds were hit
  std::map<std::string, long> stats;
};

struct ModelTooLarge : std::runtime_error {
  explicit ModelTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Decides the reactive judgement by tableau product and SCC emptiness with
// response/strong-fairness pair pruning; counterexamples are re-validated
// against the definitional predicates before being returned.
Verdict complete_paths_semantics(const Judgement& j);

// Independent bounded oracle: enumerates every finite run up to stem_bound
// and every lasso with stem <= stem_bound, cycle <= cycle_bound, deciding
// completeness per run directly from the definitions.
Verdict oracle_check(const Judgement& j, size_t stem_bound, size_t cycle_bound);

// Saturating-counter check of FS3: no partial trace contains more t_i than
// r_i occurrences.  Exact when the r-surplus never exceeds `cap` (see the
// "saturated" stat).
Verdict check_counting_fs3(const Ltsc& l, const std::string& r_action, const std::string& t_action,
                           int cap);

enum class Role { FairScheduler, Mutex };

struct HierarchyResult {
  bool safety_ok = false;           // FS3'/FS4 resp. ME1/ME2
  std::string request = "none";     // weakest criterion for FS1 / ME6
  std::string granting = "none";    // weakest criterion for FS2 / ME3
  std::vector<std::string> notes;
};

HierarchyResult classify_hierarchy(const Ltsc& l, FormulaStore& store, Role role);

}  // namespace ccst
