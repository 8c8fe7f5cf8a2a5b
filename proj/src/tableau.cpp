#include "tableau.hpp"

#include <algorithm>
#include <functional>

namespace ccst {

namespace {

void collect_untils(const FormulaStore& store, FormulaId f, std::set<FormulaId>& out) {
  const FormulaNode& n = store.node(f);
  if (n.op == FOp::U) out.insert(f);
  if (n.a >= 0) collect_untils(store, n.a, out);
  if (n.b >= 0) collect_untils(store, n.b, out);
}

struct Partial {
  std::set<FormulaId> all;
  std::set<std::string> pos, neg;
  std::set<FormulaId> nexts;
  bool strong = false;
  std::set<FormulaId> fulfilled;
};

}  // namespace

Tableau::Tableau(FormulaStore& store, FormulaId nnf_formula) : store_(store) {
  std::set<FormulaId> us;
  collect_untils(store, nnf_formula, us);
  untils_.assign(us.begin(), us.end());
  initial_ = saturate({nnf_formula});
}

bool Tableau::accepting_for(int id, FormulaId u) const {
  const TabNode& n = nodes_[id];
  if (!std::binary_search(n.all.begin(), n.all.end(), u)) return true;
  return n.fulfilled.count(u) > 0;
}

bool Tableau::compatible(int id, const std::set<std::string>& atoms) const {
  const TabNode& n = nodes_[id];
  for (const auto& a : n.pos_lits)
    if (!atoms.count(a)) return false;
  for (const auto& a : n.neg_lits)
    if (atoms.count(a)) return false;
  return true;
}

int Tableau::intern(TabNode n) {
  auto it = index_.find(n.all);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(nodes_.size());
  index_.emplace(n.all, id);
  nodes_.push_back(std::move(n));
  return id;
}

std::vector<int> Tableau::saturate(const std::vector<FormulaId>& todo) {
  std::vector<int> out;
  std::set<std::vector<FormulaId>> seen;

  std::function<void(Partial, std::vector<FormulaId>)> expand =
      [&](Partial p, std::vector<FormulaId> pending) {
        while (!pending.empty()) {
          FormulaId f = pending.back();
          pending.pop_back();
          if (p.all.count(f)) continue;
          const FormulaNode& n = store_.node(f);
          if (n.op != FOp::True) p.all.insert(f);
          switch (n.op) {
            case FOp::True: break;
            case FOp::False: return;  // inconsistent branch
            case FOp::Atom:
              if (p.neg.count(n.atom)) return;
              p.pos.insert(n.atom);
              break;
            case FOp::Not: {
              const FormulaNode& a = store_.node(n.a);
              if (a.op != FOp::Atom) return;  // NNF guarantees literals only
              if (p.pos.count(a.atom)) return;
              p.neg.insert(a.atom);
              break;
            }
            case FOp::And:
              pending.push_back(n.a);
              pending.push_back(n.b);
              break;
            case FOp::Or: {
              Partial q = p;
              std::vector<FormulaId> qp = pending;
              qp.push_back(n.a);
              expand(std::move(q), std::move(qp));
              pending.push_back(n.b);
              break;
            }
            case FOp::X:
              p.nexts.insert(n.a);
              p.strong = true;
              break;
            case FOp::Y:
              p.nexts.insert(n.a);
              break;
            case FOp::U: {
              // b now (fulfilled), or a now and U again next (strong).
              Partial q = p;
              q.fulfilled.insert(f);
              std::vector<FormulaId> qp = pending;
              qp.push_back(n.b);
              expand(std::move(q), std::move(qp));
              p.nexts.insert(f);
              p.strong = true;
              pending.push_back(n.a);
              break;
            }
            case FOp::W: {
              Partial q = p;
              std::vector<FormulaId> qp = pending;
              qp.push_back(n.b);
              expand(std::move(q), std::move(qp));
              p.nexts.insert(f);
              pending.push_back(n.a);
              break;
            }
            default:
              return;  // Implies/F/G never appear in NNF
          }
        }
        TabNode node;
        node.all.assign(p.all.begin(), p.all.end());
        for (FormulaId u : p.fulfilled) node.all.push_back(-1 - u);  // fulfilment marks
        std::sort(node.all.begin(), node.all.end());
        if (!seen.insert(node.all).second) return;
        node.pos_lits.assign(p.pos.begin(), p.pos.end());
        node.neg_lits.assign(p.neg.begin(), p.neg.end());
        node.nexts.assign(p.nexts.begin(), p.nexts.end());
        node.has_strong_next = p.strong;
        node.fulfilled = p.fulfilled;
        out.push_back(intern(std::move(node)));
      };

  expand(Partial{}, todo);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<int>& Tableau::successors(int id) {
  auto it = succ_.find(id);
  if (it != succ_.end()) return it->second;
  std::vector<int> next = saturate(nodes_[id].nexts);
  return succ_.emplace(id, std::move(next)).first->second;
}

}  // namespace ccst
