#include "ccst/ltsc.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace ccst {

namespace {

void prepend_component(DerivedStep& s, char d) {
  std::set<std::string> comps;
  for (const auto& c : s.components) comps.insert(std::string(1, d) + c);
  s.components = std::move(comps);
  for (auto& c : s.contributions) c.component = std::string(1, d) + c.component;
}

struct Deriver {
  const Definitions& defs;
  std::set<std::string> unfolding;  // guard against unguarded recursion

  std::vector<DerivedStep> derive(const ProcessPtr& p) {
    switch (p->kind) {
      case Process::Kind::Choice: {
        std::vector<DerivedStep> out;
        for (const auto& b : p->branches) {
          DerivedStep s;
          s.label = b.action;
          s.components = {""};
          if (b.tag) s.tags.insert(*b.tag);
          s.target = b.continuation;
          s.contributions.push_back({"", b.action, false});
          out.push_back(std::move(s));
        }
        return out;
      }
      case Process::Kind::Parallel: {
        std::vector<DerivedStep> ls = derive(p->left);
        std::vector<DerivedStep> rs = derive(p->right);
        std::vector<DerivedStep> out;
        for (const auto& s : ls) {
          DerivedStep n = s;
          prepend_component(n, 'L');
          n.target = Process::parallel(s.target, p->right);
          out.push_back(std::move(n));
        }
        for (const auto& s : rs) {
          DerivedStep n = s;
          prepend_component(n, 'R');
          n.target = Process::parallel(p->left, s.target);
          out.push_back(std::move(n));
        }
        for (const auto& a : ls) {
          if (!a.label.is_visible()) continue;
          for (const auto& b : rs) {
            if (!b.label.is_visible()) continue;
            if (b.label != a.label.complement()) continue;
            DerivedStep n;
            n.label = ActionLabel::tau();
            DerivedStep la = a, rb = b;
            prepend_component(la, 'L');
            prepend_component(rb, 'R');
            n.components = la.components;
            n.components.insert(rb.components.begin(), rb.components.end());
            n.tags = a.tags;
            n.tags.insert(b.tags.begin(), b.tags.end());
            n.target = Process::parallel(a.target, b.target);
            n.contributions = la.contributions;
            n.contributions.insert(n.contributions.end(), rb.contributions.begin(),
                                   rb.contributions.end());
            out.push_back(std::move(n));
          }
        }
        return out;
      }
      case Process::Kind::Restrict: {
        std::vector<DerivedStep> out;
        for (auto& s : derive(p->child)) {
          if (s.label.is_visible() && p->restricted.count(s.label.name)) continue;
          s.target = Process::restrict(s.target, p->restricted);
          out.push_back(std::move(s));
        }
        return out;
      }
      case Process::Kind::Relabel: {
        std::vector<DerivedStep> out;
        for (auto& s : derive(p->child)) {
          s.label = apply_relabelling(p->relabel, s.label);
          for (auto& c : s.contributions) c.leaf_action = apply_relabelling(p->relabel, c.leaf_action);
          s.target = Process::relabelling(s.target, p->relabel);
          out.push_back(std::move(s));
        }
        return out;
      }
      case Process::Kind::Ident: {
        auto it = defs.defs.find(p->ident);
        if (it == defs.defs.end())
          throw ValidationError("unbound identifier '" + p->ident + "'");
        if (!unfolding.insert(p->ident).second)
          throw ValidationError("unguarded recursion through '" + p->ident + "'");
        std::vector<DerivedStep> out = derive(it->second);
        unfolding.erase(p->ident);
        // A step of a defined register whose target is the defining
        // identifier itself is a self-loop; signal emissions are legal only
        // in this shape, so mark the contribution here.
        for (auto& s : out) {
          if (s.components.size() == 1 && *s.components.begin() == "" &&
              s.target->kind == Process::Kind::Ident && s.target->ident == p->ident) {
            for (auto& c : s.contributions) c.register_selfloop = true;
          }
        }
        return out;
      }
    }
    return {};
  }
};

bool step_less(const DerivedStep& a, const DerivedStep& b, const std::string& ka,
               const std::string& kb) {
  if (a.label != b.label) return a.label < b.label;
  if (a.components != b.components) return a.components < b.components;
  if (ka != kb) return ka < kb;
  return a.tags < b.tags;
}

}  // namespace

std::vector<DerivedStep> derive_transitions(const Definitions& defs, const ProcessPtr& p) {
  Deriver d{defs, {}};
  return d.derive(p);
}

Ltsc explore(const Definitions& defs, const ProcessPtr& root, size_t bound) {
  if (bound < 1) throw std::invalid_argument("explore bound must be at least 1");
  Ltsc l;
  std::map<std::string, int> index;
  std::vector<ProcessPtr> terms;

  auto intern = [&](const ProcessPtr& p) {
    std::string key = canonical(p);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (l.state_names.size() >= bound) throw BoundExceeded(bound);
    int id = static_cast<int>(l.state_names.size());
    index.emplace(key, id);
    l.state_names.push_back(std::move(key));
    terms.push_back(p);
    return id;
  };

  l.initial = intern(root);
  std::deque<int> queue{l.initial};
  l.outgoing.resize(1);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    std::vector<DerivedStep> steps = derive_transitions(defs, terms[s]);
    std::vector<std::pair<DerivedStep, std::string>> keyed;
    keyed.reserve(steps.size());
    for (auto& st : steps) keyed.emplace_back(std::move(st), canonical(st.target));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      return step_less(a.first, b.first, a.second, b.second);
    });
    for (auto& [st, key] : keyed) {
      size_t before = l.state_names.size();
      int tgt = intern(st.target);
      if (l.state_names.size() > before) {
        queue.push_back(tgt);
        l.outgoing.resize(l.state_names.size());
      }
      Transition t;
      t.id = static_cast<int>(l.transitions.size());
      t.source = s;
      t.label = st.label;
      t.components = std::move(st.components);
      t.tags = std::move(st.tags);
      t.target = tgt;
      t.contributions = std::move(st.contributions);
      l.outgoing[s].push_back(t.id);
      l.transitions.push_back(std::move(t));
    }
  }

  l.concurrent = concurrency(l, defs.signals);
  l.spurious_any = mark_spurious(l, l.visible_labels());
  return l;
}

std::set<std::string> Ltsc::visible_labels() const {
  std::set<std::string> out;
  for (const auto& t : transitions)
    if (t.label.is_visible()) out.insert(t.label.str());
  return out;
}

bool Ltsc::has_timeouts() const {
  for (const auto& t : transitions)
    if (t.label.is_timeout()) return true;
  return false;
}

std::vector<std::vector<bool>> concurrency(const Ltsc& l, const std::set<std::string>& signals) {
  size_t n = l.transitions.size();
  std::vector<std::vector<bool>> conc(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    const auto& ti = l.transitions[i];
    for (size_t j = 0; j < n; ++j) {
      const auto& tj = l.transitions[j];
      std::vector<std::string> shared;
      std::set_intersection(ti.components.begin(), ti.components.end(), tj.components.begin(),
                            tj.components.end(), std::back_inserter(shared));
      if (shared.empty()) {
        conc[i][j] = true;
        continue;
      }
      if (i == j || signals.empty()) continue;
      // Signal adjustment: t smile-dot u also holds when u's contribution at
      // every shared component is a signal-emission self-loop.
      bool all_signal_reads = true;
      for (const auto& c : shared) {
        bool ok = false;
        for (const auto& contrib : tj.contributions) {
          if (contrib.component != c) continue;
          ok = contrib.register_selfloop && contrib.leaf_action.kind == ActKind::Coname &&
               signals.count(contrib.leaf_action.name);
          break;
        }
        if (!ok) {
          all_signal_reads = false;
          break;
        }
      }
      if (all_signal_reads) conc[i][j] = true;
    }
  }
  return conc;
}

std::set<int> mark_spurious(const Ltsc& l, const std::set<std::string>& E) {
  std::set<int> out;
  for (const auto& t : l.transitions) {
    if (!t.label.is_timeout()) continue;
    for (int uid : l.outgoing[t.source]) {
      const auto& u = l.transitions[uid];
      if (u.label.is_tau() || (u.label.is_visible() && !E.count(u.label.str()))) {
        out.insert(t.id);
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> check_closure_property(const Ltsc& l) {
  std::vector<std::string> violations;
  for (const auto& t : l.transitions) {
    // BFS from source(t) over transitions v with t smile-dot v.
    std::vector<bool> seen(l.num_states(), false);
    std::deque<int> q{t.source};
    seen[t.source] = true;
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      // The reached state must offer a future variant of t: same label,
      // interfering with t.
      bool variant = false;
      for (int uid : l.outgoing[s]) {
        const auto& u = l.transitions[uid];
        if (u.label == t.label && !l.conc(t.id, u.id)) {
          variant = true;
          break;
        }
      }
      if (!variant)
        violations.push_back("transition " + std::to_string(t.id) + " (" + t.label.str() +
                             " from state " + std::to_string(t.source) +
                             ") has no interfering variant at state " + std::to_string(s));
      for (int vid : l.outgoing[s]) {
        const auto& v = l.transitions[vid];
        if (!l.conc(t.id, v.id)) continue;
        if (!seen[v.target]) {
          seen[v.target] = true;
          q.push_back(v.target);
        }
      }
    }
  }
  return violations;
}

}  // namespace ccst
