#pragma once

#include <random>

#include "ccst/checker.hpp"
#include "ccst/kripke.hpp"
#include "ccst/models.hpp"

// Shared helpers for the unit and acceptance suites: deterministic random
// generators for ASTs, LTSCs and formulas, plus the formula-translation
// route used as an independent oracle.

namespace ccst::testing {

using Rng = std::mt19937;

inline int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

// ---- random process terms (for the parser round-trip property) ----

inline ProcessPtr random_process(Rng& rng, int depth, const std::vector<std::string>& idents) {
  int kind = depth <= 0 ? pick(rng, 2) : pick(rng, 6);
  static const std::vector<std::string> names = {"a", "b", "c", "req", "ack_1"};
  auto act = [&]() {
    int k = pick(rng, 4);
    if (k == 0) return ActionLabel::tau();
    if (k == 1) return ActionLabel::timeout();
    const std::string& n = names[pick(rng, static_cast<int>(names.size()))];
    return k == 2 ? ActionLabel::mk_name(n) : ActionLabel::mk_coname(n);
  };
  switch (kind) {
    case 0: return Process::identifier(idents[pick(rng, static_cast<int>(idents.size()))]);
    case 1: return Process::nil();
    case 2: {  // choice
      std::vector<Prefix> branches;
      int n = 1 + pick(rng, 3);
      for (int i = 0; i < n; ++i) {
        Prefix b;
        b.action = act();
        if (pick(rng, 4) == 0) b.tag = "tg" + std::to_string(pick(rng, 3));
        b.continuation = random_process(rng, depth - 1, idents);
        branches.push_back(std::move(b));
      }
      return Process::choice(std::move(branches));
    }
    case 3:
      return Process::parallel(random_process(rng, depth - 1, idents),
                               random_process(rng, depth - 1, idents));
    case 4: {
      std::set<std::string> r;
      int n = pick(rng, 3);
      for (int i = 0; i < n; ++i) r.insert(names[pick(rng, static_cast<int>(names.size()))]);
      return Process::restrict(random_process(rng, depth - 1, idents), std::move(r));
    }
    default: {
      std::map<std::string, std::string> f;
      int n = 1 + pick(rng, 2);
      for (int i = 0; i < n; ++i)
        f[names[pick(rng, static_cast<int>(names.size()))]] =
            names[pick(rng, static_cast<int>(names.size()))];
      return Process::relabelling(random_process(rng, depth - 1, idents), std::move(f));
    }
  }
}

// ---- random LTSCs (for the translation differential) ----

inline Ltsc random_ltsc(Rng& rng, int max_states = 6, int max_trans = 10,
                        bool with_tau = true) {
  Ltsc l;
  int ns = 2 + pick(rng, max_states - 1);
  static const std::vector<std::string> labels = {"a", "b", "c"};
  l.state_names.resize(ns);
  for (int s = 0; s < ns; ++s) l.state_names[s] = "s" + std::to_string(s);
  l.outgoing.resize(ns);
  int nt = 1 + pick(rng, max_trans);
  for (int i = 0; i < nt; ++i) {
    Transition t;
    t.id = i;
    // chain the first transitions so most states are reachable
    t.source = i < ns - 1 ? i : pick(rng, ns);
    t.target = i < ns - 1 ? i + 1 : pick(rng, ns);
    int lk = pick(rng, 4);
    t.label = (lk == 0 && with_tau)
                  ? ActionLabel::tau()
                  : ActionLabel::mk_name(labels[pick(rng, static_cast<int>(labels.size()))]);
    l.outgoing[t.source].push_back(t.id);
    l.transitions.push_back(std::move(t));
  }
  l.concurrent.assign(nt, std::vector<bool>(nt, false));
  for (int a = 0; a < nt; ++a)
    for (int b = 0; b < nt; ++b)
      if (a != b) l.concurrent[a][b] = pick(rng, 3) == 0;
  l.initial = 0;
  return l;
}

inline FormulaId random_formula(FormulaStore& s, Rng& rng, int depth) {
  static const std::vector<std::string> atoms = {"a", "b", "c"};
  if (depth <= 0) {
    int k = pick(rng, 4);
    if (k == 3) return s.tru();
    return s.atom(atoms[pick(rng, static_cast<int>(atoms.size()))]);
  }
  switch (pick(rng, 10)) {
    case 0: return s.mk_not(random_formula(s, rng, depth - 1));
    case 1: return s.mk_and(random_formula(s, rng, depth - 1), random_formula(s, rng, depth - 1));
    case 2: return s.mk_or(random_formula(s, rng, depth - 1), random_formula(s, rng, depth - 1));
    case 3: return s.implies(random_formula(s, rng, depth - 1), random_formula(s, rng, depth - 1));
    case 4: return s.next(random_formula(s, rng, depth - 1));
    case 5: return s.weak_next(random_formula(s, rng, depth - 1));
    case 6: return s.eventually(random_formula(s, rng, depth - 1));
    case 7: return s.always(random_formula(s, rng, depth - 1));
    case 8: return s.until(random_formula(s, rng, depth - 1), random_formula(s, rng, depth - 1));
    default:
      return s.weak_until(random_formula(s, rng, depth - 1), random_formula(s, rng, depth - 1));
  }
}

// Formulas from the safety grammar only.
inline FormulaId random_safety_formula(FormulaStore& s, Rng& rng, int depth) {
  static const std::vector<std::string> atoms = {"a", "b", "c"};
  if (depth <= 0) {
    const std::string& a = atoms[pick(rng, static_cast<int>(atoms.size()))];
    return pick(rng, 2) ? s.atom(a) : s.mk_not(s.atom(a));
  }
  switch (pick(rng, 5)) {
    case 0: return s.mk_and(random_safety_formula(s, rng, depth - 1),
                            random_safety_formula(s, rng, depth - 1));
    case 1: return s.mk_or(random_safety_formula(s, rng, depth - 1),
                           random_safety_formula(s, rng, depth - 1));
    case 2: return s.weak_next(random_safety_formula(s, rng, depth - 1));
    case 3: return s.always(random_safety_formula(s, rng, depth - 1));
    default:
      return s.weak_until(random_safety_formula(s, rng, depth - 1),
                          random_safety_formula(s, rng, depth - 1));
  }
}

// ---- the section-7 translation route ----

// Maps an LTS run onto the corresponding path of the instrumented structure
// (states interleaved with the halfway states of all taken transitions).
inline std::vector<int> run_to_khat_states(const Ltsc& l, const KripkeStructure& khat,
                                           const std::vector<int>& transitions, int start) {
  std::map<int, int> mid_of;
  for (size_t s = 0; s < khat.size(); ++s)
    if (khat.trans_origin[s] >= 0) mid_of[khat.trans_origin[s]] = static_cast<int>(s);
  std::vector<int> out{start};
  for (int t : transitions) {
    out.push_back(mid_of.at(t));
    out.push_back(l.transitions[t].target);
  }
  return out;
}

struct TranslationRoute {
  FormulaStore* store;
  const Ltsc* l;
  KripkeStructure khat;
  FormulaId full;  // Z => (CC_B => Q(phi))

  TranslationRoute(FormulaStore& s, const Ltsc& model, const std::set<std::string>& B,
                   const Criterion& cc, FormulaId phi)
      : store(&s), l(&model) {
    std::vector<TaskDef> tasks = cc.tasks;
    if (cc.kind == Criterion::Kind::Progress || cc.kind == Criterion::Kind::WeakFair ||
        cc.kind == Criterion::Kind::StrongFair) {
      // The all-transitions task encodes the progress baseline: it rules out
      // the paddings of finite runs that stop short of a B-deadlock, which
      // the per-task conjuncts alone do not see.
      TaskDef all;
      all.name = "__all";
      for (const auto& t : model.transitions) all.transitions.insert(t.id);
      if (cc.kind == Criterion::Kind::Progress) tasks = {all};
      else tasks.push_back(all);
    }
    khat = instrument(model, B, model.visible_labels(), tasks);
    FormulaId ccf;
    switch (cc.kind) {
      case Criterion::Kind::Top: ccf = s.tru(); break;
      case Criterion::Kind::Progress:
      case Criterion::Kind::WeakFair: {
        std::vector<TaskRef> refs;
        for (const auto& t : tasks) refs.push_back({t.name, t.transitions});
        ccf = build_wf(s, refs);
        break;
      }
      case Criterion::Kind::StrongFair: {
        std::vector<TaskRef> refs;
        for (const auto& t : tasks) refs.push_back({t.name, t.transitions});
        ccf = build_sf(s, refs);
        break;
      }
      case Criterion::Kind::Justness: {
        std::vector<int> nb;
        for (const auto& t : model.transitions)
          if (!(t.label.is_visible() && B.count(t.label.str()))) nb.push_back(t.id);
        ccf = build_j(s, nb);
        break;
      }
    }
    full = s.implies(formula_z(s), s.implies(ccf, transform_q(s, phi)));
  }

  // True when the embedded run satisfies Z => (CC_B => Q(phi)).
  bool run_satisfies(const Run& run) const {
    StateLasso lasso;
    if (run.finite()) {
      lasso = embed_infinite(khat, run_to_khat_states(*l, khat, run.stem, l->initial));
    } else {
      std::vector<int> stem_states = run_to_khat_states(*l, khat, run.stem, l->initial);
      int anchor = stem_states.back();
      std::vector<int> cyc_states = run_to_khat_states(*l, khat, run.cycle, anchor);
      lasso.stem.assign(stem_states.begin(), stem_states.end() - 1);
      lasso.cycle.assign(cyc_states.begin(), cyc_states.end() - 1);
    }
    return eval(*store, full, lasso_props(khat, lasso));
  }

  // Enumerates runs up to the bounds (and at most max_runs of them);
  // true iff no enumerated run falsifies.
  bool bounded_verdict(size_t stem_bound, size_t cycle_bound, size_t max_runs = 100000) const {
    bool ok = true;
    size_t runs = 0;
    std::vector<int> stem;
    std::vector<int> states{l->initial};
    std::function<void()> cycles_from = [&]() {
      int anchor = states.back();
      std::vector<int> cyc;
      std::vector<int> cst{anchor};
      std::function<void()> go = [&]() {
        if (!ok || runs > max_runs) return;
        if (!cyc.empty() && cst.back() == anchor) {
          ++runs;
          if (!run_satisfies({stem, cyc})) {
            ok = false;
            return;
          }
        }
        if (cyc.size() >= cycle_bound) return;
        for (int tid : l->outgoing[cst.back()]) {
          cyc.push_back(tid);
          cst.push_back(l->transitions[tid].target);
          go();
          cyc.pop_back();
          cst.pop_back();
        }
      };
      go();
    };
    std::function<void()> go_stem = [&]() {
      if (!ok || runs > max_runs) return;
      ++runs;
      if (!run_satisfies({stem, {}})) {
        ok = false;
        return;
      }
      cycles_from();
      if (stem.size() >= stem_bound) return;
      for (int tid : l->outgoing[states.back()]) {
        stem.push_back(tid);
        states.push_back(l->transitions[tid].target);
        go_stem();
        stem.pop_back();
        states.pop_back();
      }
    };
    go_stem();
    return ok;
  }
};

}  // namespace ccst::testing
