#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ccst {

// LTL over string atoms.  Atoms are either visible action labels ("ec_A",
// "'a"), or instrumentation propositions of the hat-Kripke construction:
//   "tr"            halfway state marker
//   "en$T"          task T enabled (modulo blocking)
//   "oc$T"          task T occurs
//   "en#<id>"       transition <id> enabled at its source state
//   "int#<id>"      an interfering transition occurs (written #t)
enum class FOp { True, False, Atom, Not, And, Or, Implies, X, Y, F, G, U, W };

using FormulaId = int;

struct FormulaNode {
  FOp op;
  FormulaId a = -1, b = -1;
  std::string atom;
};

// Hash-consed formula store: structural equality is id equality.
class FormulaStore {
 public:
  FormulaId tru() { return mk({FOp::True, -1, -1, ""}); }
  FormulaId fls() { return mk({FOp::False, -1, -1, ""}); }
  FormulaId atom(const std::string& name) { return mk({FOp::Atom, -1, -1, name}); }
  FormulaId mk_not(FormulaId a) { return mk({FOp::Not, a, -1, ""}); }
  FormulaId mk_and(FormulaId a, FormulaId b) { return mk({FOp::And, a, b, ""}); }
  FormulaId mk_or(FormulaId a, FormulaId b) { return mk({FOp::Or, a, b, ""}); }
  FormulaId implies(FormulaId a, FormulaId b) { return mk({FOp::Implies, a, b, ""}); }
  FormulaId next(FormulaId a) { return mk({FOp::X, a, -1, ""}); }
  FormulaId weak_next(FormulaId a) { return mk({FOp::Y, a, -1, ""}); }
  FormulaId eventually(FormulaId a) { return mk({FOp::F, a, -1, ""}); }
  FormulaId always(FormulaId a) { return mk({FOp::G, a, -1, ""}); }
  FormulaId until(FormulaId a, FormulaId b) { return mk({FOp::U, a, b, ""}); }
  FormulaId weak_until(FormulaId a, FormulaId b) { return mk({FOp::W, a, b, ""}); }

  FormulaId conj(const std::vector<FormulaId>& fs);  // empty conjunction = true
  FormulaId disj(const std::vector<FormulaId>& fs);  // empty disjunction = false

  const FormulaNode& node(FormulaId id) const { return nodes_[id]; }
  std::string print(FormulaId id) const;

  // Negation normal form over {atoms, true/false, and, or, X, Y, U, W};
  // uses the dualities !X = Y! and !(p W q) = (!q) U (!p & !q).
  FormulaId nnf(FormulaId id);

  // Syntactic membership in the safety grammar p | !p | and | or | Y | G | W,
  // with -> expanded into !/| when the antecedent is an atom.
  bool is_safety_fragment(FormulaId id) const;

  std::set<std::string> atoms_of(FormulaId id) const;

 private:
  FormulaId mk(FormulaNode n);
  std::vector<FormulaNode> nodes_;
  std::map<std::tuple<FOp, FormulaId, FormulaId, std::string>, FormulaId> cons_;
};

FormulaId parse_formula(FormulaStore& store, const std::string& text);

// A path as a sequence of positions, each valued by a set of atoms.  Finite
// paths have cycle empty; otherwise the path is stem followed by cycle
// repeated forever (the cycle's last position links back to its first).
struct PropPath {
  std::vector<std::set<std::string>> stem;
  std::vector<std::set<std::string>> cycle;

  bool finite() const { return cycle.empty(); }
  size_t positions() const { return stem.size() + cycle.size(); }
};

// Path satisfaction per the finite/infinite LTL clauses: X needs a next
// position, Y holds at the path end.  Lasso suffixes are decided by
// periodicity (suffix at p >= |stem|+|cycle| equals suffix at p - |cycle|),
// with least fixpoints for F/U and greatest for G/W around the loop.
bool eval(const FormulaStore& store, FormulaId phi, const PropPath& path);

// ---- Builders for the reactive-to-standard LTL translation ----

struct TaskRef {
  std::string name;
  std::set<int> transitions;
};

FormulaId build_wf(FormulaStore& s, const std::vector<TaskRef>& tasks);
FormulaId build_sf(FormulaStore& s, const std::vector<TaskRef>& tasks);
// One response conjunct per non-blocked transition id.
FormulaId build_j(FormulaStore& s, const std::vector<int>& nonblocked_transitions);

// Q homomorphism: rewrites X so that real steps are told apart from the
// final-state padding by the alternation of the tr proposition.
FormulaId transform_q(FormulaStore& s, FormulaId phi);
// G(tr => G tr | X !tr) & G(!tr => G !tr | X tr)
FormulaId formula_z(FormulaStore& s);

inline std::string en_task_atom(const std::string& task) { return "en$" + task; }
inline std::string oc_task_atom(const std::string& task) { return "oc$" + task; }
inline std::string en_tr_atom(int t) { return "en#" + std::to_string(t); }
inline std::string interfere_atom(int t) { return "int#" + std::to_string(t); }

}  // namespace ccst
