#include "ccst/checker.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "tableau.hpp"

namespace ccst {

namespace {

// ------------------------------------------------------------- DV positions

// Positions of the De Nicola-Vaandrager view: one per LTS state, plus one
// halfway position per visible transition.  E-spurious transitions are
// removed up front; no complete path may use them.
struct DvGraph {
  struct Edge {
    int to;
    int commit;  // LTS transition committed by this edge, -1 on mid->target
  };

  const Ltsc* l = nullptr;
  int n_states = 0;
  std::vector<std::vector<Edge>> succ;
  std::vector<std::set<std::string>> val;
  std::vector<int> pos_state;  // >= 0 for state positions
  std::vector<int> pos_mid;    // >= 0 for halfway positions

  bool is_state(int pos) const { return pos_state[pos] >= 0; }
};

DvGraph build_dv(const Ltsc& l, const std::set<int>& e_spurious) {
  DvGraph g;
  g.l = &l;
  g.n_states = static_cast<int>(l.num_states());
  g.succ.resize(l.num_states());
  g.val.resize(l.num_states());
  g.pos_state.resize(l.num_states());
  g.pos_mid.assign(l.num_states(), -1);
  for (size_t s = 0; s < l.num_states(); ++s) g.pos_state[s] = static_cast<int>(s);
  for (const auto& t : l.transitions) {
    if (e_spurious.count(t.id)) continue;
    if (t.label.is_visible()) {
      int mid = static_cast<int>(g.succ.size());
      g.succ.emplace_back();
      g.val.push_back({t.label.str()});
      g.pos_state.push_back(-1);
      g.pos_mid.push_back(t.id);
      g.succ[t.source].push_back({mid, t.id});
      g.succ[mid].push_back({t.target, -1});
    } else {
      g.succ[t.source].push_back({t.target, t.id});
    }
  }
  return g;
}

// ------------------------------------------------------------------ product

struct Product {
  struct Node {
    int pos;
    int tab;
  };
  struct Edge {
    int to;
    int commit;
  };

  std::vector<Node> nodes;
  std::vector<std::vector<Edge>> succ;
  std::vector<int> initial;
  std::map<std::pair<int, int>, int> index;
};

constexpr size_t kProductCap = 2000000;

Product build_product(const DvGraph& g, Tableau& tab, int init_pos) {
  Product p;
  auto intern = [&](int pos, int tnode) {
    auto key = std::make_pair(pos, tnode);
    auto it = p.index.find(key);
    if (it != p.index.end()) return it->second;
    if (p.nodes.size() >= kProductCap) throw ModelTooLarge("tableau product exceeds node cap");
    int id = static_cast<int>(p.nodes.size());
    p.index.emplace(key, id);
    p.nodes.push_back({pos, tnode});
    p.succ.emplace_back();
    return id;
  };

  std::deque<int> queue;
  for (int tn : tab.initial()) {
    if (!tab.compatible(tn, g.val[init_pos])) continue;
    int id = intern(init_pos, tn);
    p.initial.push_back(id);
    queue.push_back(id);
  }
  std::sort(p.initial.begin(), p.initial.end());
  p.initial.erase(std::unique(p.initial.begin(), p.initial.end()), p.initial.end());
  std::set<int> expanded;
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    if (!expanded.insert(id).second) continue;
    auto [pos, tn] = p.nodes[id];
    for (const auto& e : g.succ[pos]) {
      for (int nt : tab.successors(tn)) {
        if (!tab.compatible(nt, g.val[e.to])) continue;
        size_t before = p.nodes.size();
        int nid = intern(e.to, nt);
        p.succ[id].push_back({nid, e.commit});
        if (p.nodes.size() > before) queue.push_back(nid);
      }
    }
  }
  return p;
}

// -------------------------------------------------------- criterion bookkeeping

struct PairData {
  // Justness obligations: per non-blocked transition t, the product-state
  // condition "position is the source state of t" and the discharge
  // condition "edge commits some u interfering with t".
  std::vector<int> j_obligations;                 // transition ids with label not in B
  std::vector<std::vector<bool>> interferes;      // [t][u] : u discharges t
};

PairData make_pairs(const Ltsc& l, const std::set<std::string>& B) {
  PairData pd;
  size_t n = l.transitions.size();
  pd.interferes.assign(n, std::vector<bool>(n, false));
  for (size_t t = 0; t < n; ++t)
    for (size_t u = 0; u < n; ++u) pd.interferes[t][u] = !l.conc(static_cast<int>(t), static_cast<int>(u));
  for (const auto& t : l.transitions)
    if (!(t.label.is_visible() && B.count(t.label.str()))) pd.j_obligations.push_back(t.id);
  return pd;
}

bool task_enabled_at(const Ltsc& l, const std::set<std::string>& B, const TaskDef& task,
                     int state) {
  for (int tid : l.outgoing[state]) {
    const auto& t = l.transitions[tid];
    if (!task.transitions.count(tid)) continue;
    if (t.label.is_visible() && B.count(t.label.str())) continue;
    return true;
  }
  return false;
}

// --------------------------------------------------------------- SCC search

struct SccFinder {
  const Product& p;
  const std::vector<char>& alive;
  std::vector<int> comp;  // node -> component id, -1 when not alive
  int n_comps = 0;

  SccFinder(const Product& prod, const std::vector<char>& alive_mask)
      : p(prod), alive(alive_mask), comp(prod.nodes.size(), -1) {
    // Iterative Tarjan in deterministic node order.
    int n = static_cast<int>(p.nodes.size());
    std::vector<int> idx(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int counter = 0;
    struct Frame {
      int v;
      size_t child;
    };
    for (int root = 0; root < n; ++root) {
      if (!alive[root] || idx[root] != -1) continue;
      std::vector<Frame> frames{{root, 0}};
      idx[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = 1;
      while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.child < p.succ[f.v].size()) {
          int w = p.succ[f.v][f.child].to;
          ++f.child;
          if (!alive[w]) continue;
          if (idx[w] == -1) {
            idx[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = 1;
            frames.push_back({w, 0});
          } else if (on_stack[w]) {
            low[f.v] = std::min(low[f.v], idx[w]);
          }
        } else {
          int v = f.v;
          frames.pop_back();
          if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
          if (low[v] == idx[v]) {
            int c = n_comps++;
            for (;;) {
              int w = stack.back();
              stack.pop_back();
              on_stack[w] = 0;
              comp[w] = c;
              if (w == v) break;
            }
          }
        }
      }
    }
  }
};

struct CandidateCycle {
  std::vector<int> members;  // product nodes of the pruned component
};

struct InfiniteSearch {
  const Ltsc& l;
  const DvGraph& g;
  const Product& p;
  Tableau& tab;
  const std::set<std::string>& B;
  const Criterion& cc;
  const PairData& pairs;

  bool has_self_edge(int v) const {
    for (const auto& e : p.succ[v])
      if (e.to == v) return true;
    return false;
  }

  // Iteratively prunes justness sources and strong-fairness enabling states
  // that cannot be served inside the component, then checks the Buechi and
  // weak-fairness witnesses.  Returns surviving candidate components.
  std::vector<CandidateCycle> candidates() {
    std::vector<char> alive(p.nodes.size(), 1);
    std::vector<CandidateCycle> out;
    std::deque<std::vector<int>> work;
    {
      SccFinder sccs(p, alive);
      std::vector<std::vector<int>> groups(sccs.n_comps);
      for (size_t v = 0; v < p.nodes.size(); ++v)
        if (sccs.comp[v] >= 0) groups[sccs.comp[v]].push_back(static_cast<int>(v));
      std::sort(groups.begin(), groups.end());
      for (auto& grp : groups)
        if (!grp.empty()) work.push_back(std::move(grp));
    }
    while (!work.empty()) {
      std::vector<int> members = std::move(work.front());
      work.pop_front();
      if (members.size() == 1 && !has_self_edge(members[0])) continue;

      std::set<int> member_set(members.begin(), members.end());
      auto internal_edges = [&](const std::function<void(int, const Product::Edge&)>& fn) {
        for (int v : members)
          for (const auto& e : p.succ[v])
            if (member_set.count(e.to)) fn(v, e);
      };

      // Discharged obligations and occurring tasks within this component.
      std::set<int> committed;
      internal_edges([&](int, const Product::Edge& e) {
        if (e.commit >= 0) committed.insert(e.commit);
      });
      auto dischargeable = [&](int t) {
        for (int u : committed)
          if (pairs.interferes[t][u]) return true;
        return false;
      };

      std::set<int> removed;
      if (cc.kind == Criterion::Kind::Justness) {
        for (int t : pairs.j_obligations) {
          if (dischargeable(t)) continue;
          int src = l.transitions[t].source;
          for (int v : members)
            if (g.pos_state[p.nodes[v].pos] == src) removed.insert(v);
        }
      }
      if (cc.kind == Criterion::Kind::StrongFair) {
        for (const auto& task : cc.tasks) {
          bool occurs = false;
          for (int u : committed)
            if (task.transitions.count(u)) {
              occurs = true;
              break;
            }
          if (occurs) continue;
          for (int v : members) {
            int s = g.pos_state[p.nodes[v].pos];
            if (s >= 0 && task_enabled_at(l, B, task, s)) removed.insert(v);
          }
        }
      }
      if (!removed.empty()) {
        if (removed.size() == members.size()) continue;
        std::vector<char> sub(p.nodes.size(), 0);
        for (int v : members) sub[v] = !removed.count(v);
        SccFinder sccs(p, sub);
        std::vector<std::vector<int>> groups(sccs.n_comps);
        for (int v : members)
          if (sub[v] && sccs.comp[v] >= 0) groups[sccs.comp[v]].push_back(v);
        std::sort(groups.begin(), groups.end());
        for (auto& grp : groups)
          if (!grp.empty()) work.push_back(std::move(grp));
        continue;
      }

      // Buechi sets: every until formula needs an accepting node.
      bool ok = true;
      for (FormulaId u : tab.untils()) {
        bool found = false;
        for (int v : members)
          if (tab.accepting_for(p.nodes[v].tab, u)) {
            found = true;
            break;
          }
        if (!found) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;

      // Weak fairness: a cycle is fair iff it sees a non-enabling state or an
      // occurrence; a component offering neither is hopeless as a whole.
      if (ok && cc.kind == Criterion::Kind::WeakFair) {
        for (const auto& task : cc.tasks) {
          bool occurs = false;
          for (int u : committed)
            if (task.transitions.count(u)) {
              occurs = true;
              break;
            }
          if (occurs) continue;
          bool has_gap = false;
          for (int v : members) {
            int s = g.pos_state[p.nodes[v].pos];
            if (s >= 0 && !task_enabled_at(l, B, task, s)) {
              has_gap = true;
              break;
            }
          }
          if (!has_gap) {
            ok = false;
            break;
          }
        }
      }
      if (ok) out.push_back({std::move(members)});
    }
    return out;
  }
};

// Breadth-first path between product nodes inside a member set; edges chosen
// in deterministic order.  Returns the edge sequence.
std::optional<std::vector<std::pair<int, Product::Edge>>> bfs_path(
    const Product& p, const std::set<int>& members, int from,
    const std::function<bool(int)>& is_goal) {
  std::map<int, std::pair<int, Product::Edge>> parent;
  std::deque<int> q{from};
  std::set<int> seen{from};
  if (is_goal(from)) return std::vector<std::pair<int, Product::Edge>>{};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& e : p.succ[v]) {
      if (!members.count(e.to) || seen.count(e.to)) continue;
      seen.insert(e.to);
      parent.emplace(e.to, std::make_pair(v, e));
      if (is_goal(e.to)) {
        std::vector<std::pair<int, Product::Edge>> path;
        int cur = e.to;
        while (cur != from) {
          auto [pv, pe] = parent.at(cur);
          path.emplace_back(pv, pe);
          cur = pv;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push_back(e.to);
    }
  }
  return std::nullopt;
}

}  // namespace

// ----------------------------------------------------------------- checker

Verdict complete_paths_semantics(const Judgement& j) {
  const Ltsc& l = *j.model;
  FormulaStore& store = *j.store;
  std::set<int> e_spurious = mark_spurious(l, j.E);
  DvGraph g = build_dv(l, e_spurious);
  FormulaId neg = store.nnf(store.mk_not(j.phi));
  Tableau tab(store, neg);
  Product p = build_product(g, tab, l.initial);
  PairData pairs = make_pairs(l, j.B);

  Verdict v;
  v.stats["states"] = static_cast<long>(l.num_states());
  v.stats["transitions"] = static_cast<long>(l.transitions.size());
  v.stats["tableau_nodes"] = static_cast<long>(tab.size());
  v.stats["product_nodes"] = static_cast<long>(p.nodes.size());

  auto validate = [&](const Run& run) {
    if (!run_complete(l, j.B, e_spurious, j.cc, run, l.initial))
      throw std::logic_error("internal: counterexample run is not complete");
    if (eval(store, j.phi, run_props(l, run, l.initial)))
      throw std::logic_error("internal: counterexample run satisfies the formula");
  };

  // ---- finite complete counterexamples ----
  // BFS over the product; under justness also over the set of pending
  // obligations, which must all be discharged within the run.
  {
    bool track_pending = j.cc.kind == Criterion::Kind::Justness;
    using Key = std::pair<int, std::vector<int>>;
    auto obligations_at = [&](int pos) {
      std::vector<int> obs;
      int s = g.pos_state[pos];
      if (s < 0) return obs;
      for (int tid : l.outgoing[s]) {
        const auto& t = l.transitions[tid];
        if (t.label.is_visible() && j.B.count(t.label.str())) continue;
        obs.push_back(tid);
      }
      return obs;
    };
    auto accepts = [&](int node, const std::vector<int>& pending) {
      int pos = p.nodes[node].pos;
      int s = g.pos_state[pos];
      if (s < 0) return false;
      if (!tab.accepts_end(p.nodes[node].tab)) return false;
      if (!tab.compatible(p.nodes[node].tab, g.val[pos])) return false;
      if (track_pending && !pending.empty()) return false;
      if (j.cc.kind == Criterion::Kind::Top) return true;
      return b_deadlocked(l, j.B, s);
    };

    std::map<Key, std::pair<Key, int>> parent;  // child -> (parent, commit)
    std::deque<Key> queue;
    std::set<Key> seen;
    std::optional<Key> goal;
    for (int init : p.initial) {
      Key k{init, track_pending ? obligations_at(p.nodes[init].pos) : std::vector<int>{}};
      if (seen.insert(k).second) queue.push_back(k);
    }
    for (const auto& k : queue)
      if (accepts(k.first, k.second)) {
        goal = k;
        break;
      }
    constexpr size_t kPendingCap = 500000;
    while (!queue.empty() && !goal) {
      Key k = queue.front();
      queue.pop_front();
      for (const auto& e : p.succ[k.first]) {
        std::vector<int> pending = k.second;
        if (track_pending && e.commit >= 0) {
          std::vector<int> keep;
          for (int t : pending)
            if (!pairs.interferes[t][e.commit]) keep.push_back(t);
          pending = std::move(keep);
        }
        if (track_pending) {
          for (int t : obligations_at(p.nodes[e.to].pos)) pending.push_back(t);
          std::sort(pending.begin(), pending.end());
          pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
        }
        Key nk{e.to, std::move(pending)};
        if (!seen.insert(nk).second) continue;
        if (seen.size() > kPendingCap) throw ModelTooLarge("finite search state cap exceeded");
        parent.emplace(nk, std::make_pair(k, e.commit));
        if (accepts(nk.first, nk.second)) {
          goal = nk;
          break;
        }
        queue.push_back(nk);
      }
    }
    if (goal) {
      Run run;
      Key cur = *goal;
      while (parent.count(cur)) {
        auto [pk, commit] = parent.at(cur);
        if (commit >= 0) run.stem.push_back(commit);
        cur = pk;
      }
      std::reverse(run.stem.begin(), run.stem.end());
      validate(run);
      v.holds = false;
      v.counterexample = run;
      return v;
    }
  }

  // ---- infinite (lasso) counterexamples ----
  InfiniteSearch search{l, g, p, tab, j.B, j.cc, pairs};
  for (const auto& cand : search.candidates()) {
    std::set<int> members(cand.members.begin(), cand.members.end());
    std::set<int> committed;
    for (int m : cand.members)
      for (const auto& e : p.succ[m])
        if (members.count(e.to) && e.commit >= 0) committed.insert(e.commit);
    auto dischargeable = [&](int t) {
      for (int u : committed)
        if (pairs.interferes[t][u]) return true;
      return false;
    };

    // Stem: BFS over (node, undischargeable pending obligations); entry into
    // the component requires all such obligations settled.
    bool track = j.cc.kind == Criterion::Kind::Justness;
    std::set<int> bad_obligations;
    if (track)
      for (int t : pairs.j_obligations)
        if (!dischargeable(t)) bad_obligations.insert(t);
    auto arising = [&](int pos) {
      std::vector<int> obs;
      int s = g.pos_state[pos];
      if (s < 0 || !track) return obs;
      for (int tid : l.outgoing[s])
        if (bad_obligations.count(tid)) obs.push_back(tid);
      return obs;
    };

    using Key = std::pair<int, std::vector<int>>;
    std::map<Key, std::pair<Key, int>> parent;
    std::deque<Key> queue;
    std::set<Key> seen;
    std::optional<Key> entry;
    for (int init : p.initial) {
      Key k{init, arising(p.nodes[init].pos)};
      if (seen.insert(k).second) {
        if (members.count(init) && k.second.empty()) {
          entry = k;
          break;
        }
        queue.push_back(k);
      }
    }
    constexpr size_t kStemCap = 500000;
    while (!queue.empty() && !entry) {
      Key k = queue.front();
      queue.pop_front();
      for (const auto& e : p.succ[k.first]) {
        std::vector<int> pending = k.second;
        if (track && e.commit >= 0) {
          std::vector<int> keep;
          for (int t : pending)
            if (!pairs.interferes[t][e.commit]) keep.push_back(t);
          pending = std::move(keep);
        }
        for (int t : arising(p.nodes[e.to].pos)) pending.push_back(t);
        std::sort(pending.begin(), pending.end());
        pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
        Key nk{e.to, std::move(pending)};
        if (!seen.insert(nk).second) continue;
        if (seen.size() > kStemCap) throw ModelTooLarge("stem search state cap exceeded");
        parent.emplace(nk, std::make_pair(k, e.commit));
        if (members.count(e.to) && nk.second.empty()) {
          entry = nk;
          break;
        }
        queue.push_back(nk);
      }
    }
    if (!entry) continue;

    Run run;
    {
      Key cur = *entry;
      while (parent.count(cur)) {
        auto [pk, commit] = parent.at(cur);
        if (commit >= 0) run.stem.push_back(commit);
        cur = pk;
      }
      std::reverse(run.stem.begin(), run.stem.end());
    }
    int entry_node = entry->first;

    // Waypoints the cycle must cover: Buechi witnesses, fairness witnesses,
    // and discharge edges for every obligation that can arise on the lasso.
    struct Waypoint {
      int node;
      int edge_index;  // -1: just visit the node
    };
    std::vector<Waypoint> waypoints;
    auto find_edge_committing = [&](const std::function<bool(int)>& want) -> std::optional<Waypoint> {
      for (int m : cand.members) {
        const auto& es = p.succ[m];
        for (size_t i = 0; i < es.size(); ++i)
          if (members.count(es[i].to) && es[i].commit >= 0 && want(es[i].commit))
            return Waypoint{m, static_cast<int>(i)};
      }
      return std::nullopt;
    };

    for (FormulaId u : tab.untils()) {
      for (int m : cand.members)
        if (tab.accepting_for(p.nodes[m].tab, u)) {
          waypoints.push_back({m, -1});
          break;
        }
    }
    bool feasible = true;
    if (j.cc.kind == Criterion::Kind::WeakFair || j.cc.kind == Criterion::Kind::StrongFair) {
      for (const auto& task : j.cc.tasks) {
        bool enabled_somewhere = false, enabled_everywhere = true;
        for (int m : cand.members) {
          int s = g.pos_state[p.nodes[m].pos];
          if (s < 0) continue;
          if (task_enabled_at(l, j.B, task, s))
            enabled_somewhere = true;
          else
            enabled_everywhere = false;
        }
        bool need_occurrence = j.cc.kind == Criterion::Kind::StrongFair ? enabled_somewhere
                                                                        : enabled_everywhere;
        if (need_occurrence) {
          auto w = find_edge_committing([&](int u) { return task.transitions.count(u) > 0; });
          if (!w) {
            feasible = false;
            break;
          }
          waypoints.push_back(*w);
        } else if (j.cc.kind == Criterion::Kind::WeakFair && enabled_somewhere) {
          // Route the cycle through a non-enabling state so the task is not
          // perpetually enabled on it.
          for (int m : cand.members) {
            int s = g.pos_state[p.nodes[m].pos];
            if (s >= 0 && !task_enabled_at(l, j.B, task, s)) {
              waypoints.push_back({m, -1});
              break;
            }
          }
        }
      }
      if (!feasible) continue;
    }
    if (j.cc.kind == Criterion::Kind::Justness) {
      // Obligations arising inside the component...
      feasible = true;
      std::set<int> need;
      for (int t : pairs.j_obligations) {
        int src = l.transitions[t].source;
        for (int m : cand.members)
          if (g.pos_state[p.nodes[m].pos] == src) {
            need.insert(t);
            break;
          }
      }
      // ...plus obligations left pending by the stem.
      {
        std::vector<int> states{l.initial};
        for (int t : run.stem) states.push_back(l.transitions[t].target);
        for (size_t i = 0; i < states.size(); ++i) {
          for (int tid : l.outgoing[states[i]]) {
            const auto& t = l.transitions[tid];
            if (t.label.is_visible() && j.B.count(t.label.str())) continue;
            bool discharged = false;
            for (size_t k2 = i; k2 < run.stem.size(); ++k2)
              if (pairs.interferes[tid][run.stem[k2]]) {
                discharged = true;
                break;
              }
            if (!discharged) need.insert(tid);
          }
        }
      }
      for (int t : need) {
        auto w = find_edge_committing([&](int u) { return pairs.interferes[t][u]; });
        if (!w) {
          feasible = false;
          break;
        }
        waypoints.push_back(*w);
      }
      if (!feasible) continue;
    }

    // Deterministic closed walk through all waypoints, starting and ending
    // at the entry node.
    std::sort(waypoints.begin(), waypoints.end(), [](const Waypoint& a, const Waypoint& b) {
      return std::tie(a.node, a.edge_index) < std::tie(b.node, b.edge_index);
    });
    std::vector<int> cycle_commits;
    int cur = entry_node;
    bool built = true;
    auto extend_to = [&](int goal_node) {
      auto path = bfs_path(p, members, cur, [&](int n) { return n == goal_node; });
      if (!path) return false;
      for (const auto& [from, e] : *path) {
        (void)from;
        if (e.commit >= 0) cycle_commits.push_back(e.commit);
        cur = e.to;
      }
      return true;
    };
    for (const auto& w : waypoints) {
      if (!extend_to(w.node)) {
        built = false;
        break;
      }
      if (w.edge_index >= 0) {
        const auto& e = p.succ[w.node][w.edge_index];
        if (e.commit >= 0) cycle_commits.push_back(e.commit);
        cur = e.to;
      }
    }
    if (built) built = extend_to(entry_node);
    if (built && cycle_commits.empty()) {
      // Zero-length walk: force one full loop through a successor.
      bool looped = false;
      for (const auto& e : p.succ[entry_node]) {
        if (!members.count(e.to)) continue;
        if (e.commit >= 0) cycle_commits.push_back(e.commit);
        cur = e.to;
        looped = extend_to(entry_node);
        break;
      }
      built = looped && !cycle_commits.empty();
    }
    if (!built || cycle_commits.empty()) continue;
    run.cycle = cycle_commits;
    validate(run);
    v.holds = false;
    v.counterexample = run;
    return v;
  }

  v.holds = true;
  return v;
}

// ------------------------------------------------------------------ oracle

Verdict oracle_check(const Judgement& j, size_t stem_bound, size_t cycle_bound) {
  const Ltsc& l = *j.model;
  FormulaStore& store = *j.store;
  std::set<int> e_spurious = mark_spurious(l, j.E);

  Verdict v;
  v.holds = true;
  v.exhaustive = true;
  long finite_runs = 0, lassos = 0;

  std::vector<int> stem;
  std::vector<int> states{l.initial};

  std::function<bool()> try_cycles = [&]() -> bool {
    int anchor = states.back();
    std::vector<int> cyc;
    std::vector<int> cstates{anchor};
    std::function<bool()> go = [&]() -> bool {
      if (!cyc.empty() && cstates.back() == anchor) {
        Run run{stem, cyc};
        ++lassos;
        if (run_complete(l, j.B, e_spurious, j.cc, run, l.initial) &&
            !eval(store, j.phi, run_props(l, run, l.initial))) {
          v.holds = false;
          v.counterexample = run;
          return true;
        }
      }
      if (cyc.size() >= cycle_bound) {
        v.exhaustive = false;
        return false;
      }
      for (int tid : l.outgoing[cstates.back()]) {
        if (e_spurious.count(tid)) continue;
        cyc.push_back(tid);
        cstates.push_back(l.transitions[tid].target);
        if (go()) return true;
        cyc.pop_back();
        cstates.pop_back();
      }
      return false;
    };
    return go();
  };

  std::function<bool()> go_stem = [&]() -> bool {
    // finite run ending here
    {
      Run run{stem, {}};
      ++finite_runs;
      if (run_complete(l, j.B, e_spurious, j.cc, run, l.initial) &&
          !eval(store, j.phi, run_props(l, run, l.initial))) {
        v.holds = false;
        v.counterexample = run;
        return true;
      }
    }
    if (try_cycles()) return true;
    if (stem.size() >= stem_bound) {
      v.exhaustive = false;
      return false;
    }
    for (int tid : l.outgoing[states.back()]) {
      if (e_spurious.count(tid)) continue;
      stem.push_back(tid);
      states.push_back(l.transitions[tid].target);
      if (go_stem()) return true;
      stem.pop_back();
      states.pop_back();
    }
    return false;
  };

  go_stem();
  v.stats["finite_runs"] = finite_runs;
  v.stats["lassos"] = lassos;
  return v;
}

// -------------------------------------------------------------- FS3 counter

Verdict check_counting_fs3(const Ltsc& l, const std::string& r_action, const std::string& t_action,
                           int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  Verdict v;
  v.holds = true;
  bool saturated = false;

  // diff = #t - #r along a trace, clamped to [-cap, 1]; any reachable
  // configuration with diff > 0 violates FS3.
  using Cfg = std::pair<int, int>;
  std::map<Cfg, std::pair<Cfg, int>> parent;
  std::deque<Cfg> queue;
  std::set<Cfg> seen;
  Cfg init{l.initial, 0};
  seen.insert(init);
  queue.push_back(init);
  std::optional<Cfg> bad;
  while (!queue.empty() && !bad) {
    Cfg c = queue.front();
    queue.pop_front();
    for (int tid : l.outgoing[c.first]) {
      const auto& t = l.transitions[tid];
      int d = c.second;
      if (t.label.is_visible() && t.label.str() == t_action) ++d;
      if (t.label.is_visible() && t.label.str() == r_action) --d;
      if (d < -cap) {
        d = -cap;
        saturated = true;
      }
      Cfg n{t.target, d};
      if (!seen.insert(n).second) continue;
      parent.emplace(n, std::make_pair(c, tid));
      if (d > 0) {
        bad = n;
        break;
      }
      queue.push_back(n);
    }
  }
  if (bad) {
    Run run;
    Cfg cur = *bad;
    while (parent.count(cur)) {
      auto [pc, tid] = parent.at(cur);
      run.stem.push_back(tid);
      cur = pc;
    }
    std::reverse(run.stem.begin(), run.stem.end());
    v.holds = false;
    v.counterexample = run;
  }
  v.exhaustive = !saturated;
  v.stats["saturated"] = saturated ? 1 : 0;
  return v;
}

}  // namespace ccst
