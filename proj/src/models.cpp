#include "ccst/models.hpp"

#include <algorithm>
#include <functional>

namespace ccst {

namespace {

const std::map<std::string, std::string>& catalog() {
  static const std::map<std::string, std::string> names = {
      {"vending", "vending.ccst"},
      {"beer-d", "beer-d.ccst"},
      {"bart-e", "bart-e.ccst"},
      {"bars-f", "bars-f.ccst"},
      {"ex43", "ex43.ccst"},
      {"fs-f1f2", "fs-f1f2.ccst"},
      {"fs-e1ge2", "fs-e1ge2.ccst"},
      {"fs-e1e2", "fs-e1e2.ccst"},
      {"fs-f0", "fs-f0.ccst"},
      {"fs-gatekeeper", "fs-gatekeeper.ccst"},
      {"fs-sequential", "fs-sequential.ccst"},
      {"me-f1f2", "me-f1f2.ccst"},
      {"me-r1r2", "me-r1r2.ccst"},
      {"me-h", "me-h.ccst"},
      {"me-zero", "me-zero.ccst"},
      {"me-w", "me-w.ccst"},
      {"me-gatekeeper", "me-gatekeeper.ccst"},
      {"encapsulated-gatekeeper", "encapsulated-gatekeeper.ccst"},
      {"peterson-ccs", "peterson-ccs.ccst"},
      {"peterson-ccs-signals", "peterson-ccs-signals.ccst"},
      {"peterson-ccst", "peterson-ccst.ccst"},
      {"peterson-petri", "peterson-petri.pnet"},
      {"peterson-petri-read", "peterson-petri-read.pnet"},
  };
  return names;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, file] : catalog()) out.push_back(name);
  return out;
}

BuiltinModel builtin(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw std::out_of_range("unknown builtin model '" + name + "'");
  const std::string& text = asset_texts().at(it->second);
  BuiltinModel bm;
  bm.name = name;
  if (it->second.size() > 5 && it->second.substr(it->second.size() - 5) == ".pnet") {
    bm.content = parse_pnet(text);
  } else {
    Model m = parse_model(text);
    validate(m.defs, m.root);
    bm.content = std::move(m);
  }
  return bm;
}

Ltsc builtin_ltsc(const std::string& name, size_t bound) {
  BuiltinModel bm = builtin(name);
  if (bm.is_net()) return net_to_ltsc(bm.net(), bound).lts;
  return explore(bm.ccs().defs, bm.ccs().root, bound);
}

// ------------------------------------------------------------ requirements

namespace {

FormulaId not_act(FormulaStore& s, const std::string& i) {
  return s.conj({s.mk_not(s.atom("ln_" + i)), s.mk_not(s.atom("ec_" + i)),
                 s.mk_not(s.atom("lc_" + i)), s.mk_not(s.atom("en_" + i))});
}

std::set<std::string> me_blocking(const std::vector<std::string>& indices) {
  std::set<std::string> b;
  for (const auto& i : indices) b.insert("ln_" + i);
  return b;
}

std::set<std::string> fs_blocking(const std::vector<std::string>& indices) {
  std::set<std::string> b;
  for (const auto& i : indices) b.insert("r" + i);
  return b;
}

}  // namespace

std::set<std::string> me_default_E(const std::vector<std::string>& indices) {
  std::set<std::string> e = me_blocking(indices);
  for (const auto& i : indices) e.insert("lc_" + i);
  return e;
}

RequirementSpec requirement(FormulaStore& s, const std::string& name, const std::string& i,
                            const std::string& j, const std::vector<std::string>& indices) {
  RequirementSpec r;
  r.name = name;
  auto a = [&](const std::string& base) { return s.atom(base + "_" + i); };

  if (name == "ME1") {
    FormulaId na = not_act(s, i);
    auto leg = [&](const std::string& from, const std::string& to) {
      return s.always(s.implies(s.atom(from + "_" + i),
                                s.weak_next(s.weak_until(na, s.atom(to + "_" + i)))));
    };
    r.formula = s.conj({s.weak_until(na, a("ln")), leg("ln", "ec"), leg("ec", "lc"),
                        leg("lc", "en"), leg("en", "ln")});
    r.blocking = me_blocking(indices);
    r.safety = true;
  } else if (name == "ME2") {
    r.formula = s.always(
        s.implies(a("ec"), s.weak_until(s.mk_not(s.atom("ec_" + j)), a("lc"))));
    r.blocking = me_blocking(indices);
    r.safety = true;
  } else if (name == "ME3") {
    r.formula = s.always(s.implies(a("ln"), s.eventually(a("ec"))));
    r.blocking = me_blocking(indices);
    r.criterion_parameterized = true;
  } else if (name == "ME4") {
    r.formula = s.always(s.implies(a("ec"), s.eventually(a("lc"))));
    r.blocking = me_blocking(indices);
    r.criterion_parameterized = true;
  } else if (name == "ME5") {
    r.formula = s.always(s.implies(a("lc"), s.eventually(a("en"))));
    r.blocking = me_blocking(indices);
    r.criterion_parameterized = true;
  } else if (name == "ME6") {
    r.formula = s.mk_and(s.eventually(a("ln")),
                         s.always(s.implies(a("en"), s.eventually(a("ln")))));
    r.blocking = me_blocking(indices);
    r.blocking.erase("ln_" + i);
    r.criterion_parameterized = true;
  } else if (name == "FS1") {
    r.formula = s.always(s.eventually(s.atom("r" + i)));
    r.blocking = fs_blocking(indices);
    r.blocking.erase("r" + i);
    r.criterion_parameterized = true;
  } else if (name == "FS2") {
    r.formula = s.always(s.implies(s.atom("r" + i), s.eventually(s.atom("t" + i))));
    r.blocking = fs_blocking(indices);
    r.criterion_parameterized = true;
  } else if (name == "FS3p") {
    FormulaId nt = s.mk_not(s.atom("t" + i));
    FormulaId wait = s.weak_until(nt, s.atom("r" + i));
    r.formula = s.mk_and(wait, s.always(s.implies(s.atom("t" + i), s.weak_next(wait))));
    r.blocking = fs_blocking(indices);
    r.safety = true;
  } else if (name == "FS4") {
    std::vector<FormulaId> nts;
    for (const auto& x : indices) nts.push_back(s.mk_not(s.atom("t" + x)));
    FormulaId gap = s.weak_next(s.weak_until(s.conj(nts), s.atom("e")));
    r.formula = s.always(s.implies(s.atom("t" + i), gap));
    r.blocking = fs_blocking(indices);
    r.safety = true;
  } else {
    throw std::out_of_range("unknown requirement '" + name + "'");
  }
  return r;
}

// ---------------------------------------------------------------- wrappers

namespace {

std::set<std::string> action_names(const Model& m) {
  std::set<std::string> names;
  std::function<void(const ProcessPtr&)> walk = [&](const ProcessPtr& p) {
    switch (p->kind) {
      case Process::Kind::Choice:
        for (const auto& b : p->branches) {
          if (b.action.is_visible()) names.insert(b.action.name);
          walk(b.continuation);
        }
        break;
      case Process::Kind::Parallel:
        walk(p->left);
        walk(p->right);
        break;
      case Process::Kind::Restrict:
        for (const auto& n : p->restricted) names.insert(n);
        walk(p->child);
        break;
      case Process::Kind::Relabel:
        for (const auto& [from, to] : p->relabel) {
          names.insert(from);
          names.insert(to);
        }
        walk(p->child);
        break;
      case Process::Kind::Ident:
        break;
    }
  };
  walk(m.root);
  for (const auto& [name, body] : m.defs.defs) walk(body);
  return names;
}

ProcessPtr seq(std::vector<Prefix> prefixes, ProcessPtr tail) {
  ProcessPtr p = std::move(tail);
  for (auto it = prefixes.rbegin(); it != prefixes.rend(); ++it) {
    Prefix b = *it;
    b.continuation = p;
    p = Process::choice({b});
  }
  return p;
}

}  // namespace

Model wrap_fs_interface(const Model& f) {
  std::set<std::string> used = action_names(f);
  for (const auto& fresh : {"c1", "c2"})
    if (used.count(fresh))
      throw ValidationError(std::string("name clash: process already uses '") + fresh + "'");
  Model out = f;
  std::map<std::string, std::string> reloc;
  for (const std::string i : {"1", "2"}) {
    std::string ident = "FsIface" + i;
    if (out.defs.defs.count(ident)) throw ValidationError("identifier clash: " + ident);
    out.defs.defs[ident] =
        seq({Prefix{ActionLabel::mk_name("r" + i), std::nullopt, nullptr},
             Prefix{ActionLabel::mk_coname("c" + i), std::nullopt, nullptr}},
            Process::identifier(ident));
    reloc["r" + i] = "c" + i;
  }
  out.root = Process::restrict(
      Process::parallel(Process::parallel(Process::identifier("FsIface1"),
                                          Process::relabelling(f.root, reloc)),
                        Process::identifier("FsIface2")),
      {"c1", "c2"});
  return out;
}

Model wrap_me_interface(const Model& p, const std::vector<std::string>& indices) {
  if (indices.size() != 2) throw std::invalid_argument("the input interface serves two processes");
  std::set<std::string> used = action_names(p);
  for (const auto& fresh : {"c1", "c2", "d1", "d2"})
    if (used.count(fresh))
      throw ValidationError(std::string("name clash: process already uses '") + fresh + "'");
  Model out = p;
  std::map<std::string, std::string> reloc;
  for (size_t k = 0; k < 2; ++k) {
    std::string n = std::to_string(k + 1);
    const std::string& i = indices[k];
    std::string ident = "MeIface" + n;
    if (out.defs.defs.count(ident)) throw ValidationError("identifier clash: " + ident);
    out.defs.defs[ident] =
        seq({Prefix{ActionLabel::mk_name("ln_" + i), std::nullopt, nullptr},
             Prefix{ActionLabel::mk_coname("c" + n), std::string("c") + n, nullptr},
             Prefix{ActionLabel::mk_coname("d" + n), std::nullopt, nullptr},
             Prefix{ActionLabel::mk_name("en_" + i), std::nullopt, nullptr}},
            Process::identifier(ident));
    reloc["ln_" + i] = "c" + n;
    reloc["en_" + i] = "d" + n;
  }
  out.root = Process::restrict(
      Process::parallel(Process::parallel(Process::identifier("MeIface1"),
                                          Process::relabelling(p.root, reloc)),
                        Process::identifier("MeIface2")),
      {"c1", "c2", "d1", "d2"});
  return out;
}

}  // namespace ccst
