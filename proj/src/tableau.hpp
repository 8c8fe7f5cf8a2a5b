#pragma once

#include <map>
#include <set>
#include <vector>

#include "ccst/formula.hpp"

namespace ccst {

// On-the-fly tableau for NNF formulas (atoms, literals, and/or, X, Y, U, W).
// Nodes are saturated formula sets; the X/Y arguments spell out the
// successor obligation.  U-fulfilment marks drive the generalized Buechi
// acceptance; a node can end a finite path iff it carries no strong-next
// obligation.
struct TabNode {
  std::vector<FormulaId> all;       // identity (sorted), includes fulfilled marks
  std::vector<std::string> pos_lits;
  std::vector<std::string> neg_lits;
  std::vector<FormulaId> nexts;     // successor obligations (X and Y args)
  bool has_strong_next = false;     // some X contributed to nexts
  std::set<FormulaId> fulfilled;    // U formulas fulfilled here
};

class Tableau {
 public:
  Tableau(FormulaStore& store, FormulaId nnf_formula);

  const std::vector<int>& initial() const { return initial_; }
  const std::vector<int>& successors(int id);
  const TabNode& node(int id) const { return nodes_[id]; }
  const std::vector<FormulaId>& untils() const { return untils_; }

  bool accepts_end(int id) const { return !nodes_[id].has_strong_next; }
  bool accepting_for(int id, FormulaId u) const;
  bool compatible(int id, const std::set<std::string>& atoms) const;
  size_t size() const { return nodes_.size(); }

 private:
  std::vector<int> saturate(const std::vector<FormulaId>& todo);
  int intern(TabNode n);

  FormulaStore& store_;
  std::vector<TabNode> nodes_;
  std::map<std::vector<FormulaId>, int> index_;
  std::map<int, std::vector<int>> succ_;
  std::vector<int> initial_;
  std::vector<FormulaId> untils_;
};

}  // namespace ccst
