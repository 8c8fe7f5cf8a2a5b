#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "ccst/exports.hpp"
#include "ccst/models.hpp"

using namespace ccst;

namespace {

struct LoadedModel {
  std::string label;
  BuiltinModel bm;
};

LoadedModel load_input(const std::string& input) {
  if (input.rfind("builtin:", 0) == 0) {
    std::string name = input.substr(8);
    return {name, builtin(name)};
  }
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open '" + input + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  BuiltinModel bm;
  bm.name = input;
  if (input.size() > 5 && input.substr(input.size() - 5) == ".pnet") {
    bm.content = parse_pnet(text);
  } else {
    Model m = parse_model(text);
    validate(m.defs, m.root);
    bm.content = std::move(m);
  }
  return {input, std::move(bm)};
}

std::set<std::string> split_names(const std::string& csv) {
  std::set<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.insert(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.insert(cur);
  return out;
}

Criterion make_criterion(const std::string& cc, const Ltsc& l, const std::string& tasks_spec) {
  std::vector<TaskDef> tasks;
  if (cc == "wf" || cc == "sf") {
    if (tasks_spec.empty() || tasks_spec == "default") {
      tasks = default_tasks(l);
    } else {
      auto all = default_tasks(l);
      for (const auto& want : split_names(tasks_spec)) {
        bool found = false;
        for (const auto& t : all)
          if (t.name == want) {
            tasks.push_back(t);
            found = true;
          }
        if (!found) throw std::runtime_error("no task named '" + want + "' (use label:* / tag:*)");
      }
    }
  }
  if (cc == "top") return Criterion::top();
  if (cc == "pr") return Criterion::progress();
  if (cc == "j") return Criterion::justness();
  if (cc == "wf") return Criterion::weak_fair(std::move(tasks));
  if (cc == "sf") return Criterion::strong_fair(std::move(tasks));
  throw std::runtime_error("unknown criterion '" + cc + "'");
}

std::vector<std::string> detect_me_indices(const Ltsc& l) {
  std::set<std::string> idx;
  for (const auto& lab : l.visible_labels())
    if (lab.rfind("ln_", 0) == 0) idx.insert(lab.substr(3));
  return {idx.begin(), idx.end()};
}

struct JudgementRecord {
  std::string name;
  Judgement j;
  Verdict v;
};

nlohmann::ordered_json record_json(const Ltsc& l, const JudgementRecord& r,
                                   const FormulaStore& store) {
  nlohmann::ordered_json out;
  out["name"] = r.name;
  out["criterion"] = r.j.cc.str();
  out["B"] = r.j.B;
  out["E"] = r.j.E;
  out["formula"] = store.print(r.j.phi);
  out["holds"] = r.v.holds;
  if (r.v.counterexample) out["counterexample"] = run_to_json(l, *r.v.counterexample);
  out["stats"] = r.v.stats;
  return out;
}

void print_text(const Ltsc& l, const JudgementRecord& r, const FormulaStore& store) {
  std::cout << (r.v.holds ? "PASS " : "FAIL ") << r.name << "  [cc=" << r.j.cc.str() << "]  "
            << store.print(r.j.phi) << "\n";
  if (r.v.counterexample) {
    const Run& run = *r.v.counterexample;
    std::cout << "      counterexample (" << (run.finite() ? "finite" : "lasso") << "): ";
    auto show = [&](const std::vector<int>& ts) {
      for (int t : ts) std::cout << l.transitions[t].label.str() << " ";
    };
    show(run.stem);
    if (!run.finite()) {
      std::cout << "( ";
      show(run.cycle);
      std::cout << ")^w";
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ccst - a workbench for reactive temporal judgements over CCS with time-outs"};
  app.require_subcommand(1);

  std::string input, cc = "pr", b_csv, e_csv, tasks_spec, format = "text";
  std::string req_name, idx_i, idx_j, suite, phi_text, role = "me", out_path;
  size_t bound = 100000;
  int fs3_cap = 8;
  bool verify_closure = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "builtin:<name> or a .ccst/.pnet file")->required();
    cmd->add_option("--bound", bound, "state bound for exploration");
  };

  CLI::App* c_explore = app.add_subcommand("explore", "build and print the LTSC");
  add_common(c_explore);
  c_explore->add_option("--format", format, "text | json | dot");
  c_explore->add_flag("--verify-closure", verify_closure, "check the closure property");

  CLI::App* c_check = app.add_subcommand("check", "decide reactive judgements");
  add_common(c_check);
  c_check->add_option("--cc", cc, "top | pr | j | wf | sf");
  c_check->add_option("--B", b_csv, "blocking actions, comma separated");
  c_check->add_option("--E", e_csv, "finitely blockable actions, comma separated");
  c_check->add_option("--tasks", tasks_spec, "task names (label:a, tag:x) for wf/sf");
  c_check->add_option("--req", req_name, "requirement name (ME1..ME6, FS1, FS2, FS3p, FS4)");
  c_check->add_option("--i", idx_i, "process index for --req");
  c_check->add_option("--j", idx_j, "second process index (ME2)");
  c_check->add_option("--suite", suite, "ME | FS: run the full requirement suite");
  c_check->add_option("--phi", phi_text, "an explicit LTL formula");
  c_check->add_option("--format", format, "text | json");
  c_check->add_option("--fs3-cap", fs3_cap, "counter cap for FS3");

  CLI::App* c_classify = app.add_subcommand("classify", "hierarchy coordinates of a protocol");
  add_common(c_classify);
  c_classify->add_option("--role", role, "me | fs");
  c_classify->add_option("--format", format, "text | json");

  CLI::App* c_export = app.add_subcommand("export", "write DOT / JSON / source renderings");
  add_common(c_export);
  c_export->add_option("--format", format, "dot | json | kripke-dot | source");
  c_export->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    LoadedModel lm = load_input(input);
    Ltsc l = lm.bm.is_net() ? net_to_ltsc(lm.bm.net(), bound).lts
                            : explore(lm.bm.ccs().defs, lm.bm.ccs().root, bound);
    FormulaStore store;

    std::ostream* os = &std::cout;
    std::ofstream file_out;
    if (!out_path.empty()) {
      file_out.open(out_path);
      if (!file_out) throw std::runtime_error("cannot write '" + out_path + "'");
      os = &file_out;
    }

    if (c_explore->parsed()) {
      if (verify_closure) {
        auto violations = check_closure_property(l);
        for (const auto& v : violations) std::cerr << "closure violation: " << v << "\n";
        if (!violations.empty()) return 2;
      }
      if (format == "dot") {
        *os << ltsc_to_dot(l);
      } else if (format == "json") {
        *os << ltsc_to_json(l).dump(2) << "\n";
      } else {
        *os << "states: " << l.num_states() << ", transitions: " << l.transitions.size() << "\n";
        for (const auto& t : l.transitions)
          *os << "  [" << t.id << "] s" << t.source << " --" << t.label.str() << "--> s"
              << t.target << "\n";
      }
      return 0;
    }

    if (c_export->parsed()) {
      if (format == "dot") {
        if (lm.bm.is_net())
          *os << pnet_to_dot(lm.bm.net());
        else
          *os << ltsc_to_dot(l);
      } else if (format == "kripke-dot") {
        *os << kripke_to_dot(lts_to_kripke(l));
      } else if (format == "json") {
        *os << ltsc_to_json(l).dump(2) << "\n";
      } else if (format == "source") {
        if (lm.bm.is_net())
          *os << print_pnet(lm.bm.net());
        else
          *os << print_model(lm.bm.ccs());
      } else {
        throw std::runtime_error("unknown export format '" + format + "'");
      }
      return 0;
    }

    if (c_classify->parsed()) {
      HierarchyResult res = classify_hierarchy(l, store, role == "fs" ? Role::FairScheduler
                                                                      : Role::Mutex);
      if (format == "json") {
        nlohmann::ordered_json j{{"safety", res.safety_ok},
                                 {"request", res.request},
                                 {"granting", res.granting},
                                 {"notes", res.notes}};
        *os << j.dump(2) << "\n";
      } else {
        *os << "safety: " << (res.safety_ok ? "ok" : "VIOLATED") << "\n"
            << "request axis:  " << res.request << "\n"
            << "granting axis: " << res.granting << "\n";
        for (const auto& n : res.notes) *os << "note: " << n << "\n";
      }
      return res.safety_ok ? 0 : 1;
    }

    // ---- check ----
    std::vector<std::string> me_indices = detect_me_indices(l);
    std::set<std::string> visible = l.visible_labels();
    auto base_E = [&](const std::set<std::string>& B) {
      if (!e_csv.empty()) return split_names(e_csv);
      if (!me_indices.empty() && (suite == "ME" || req_name.rfind("ME", 0) == 0)) {
        std::set<std::string> e = me_default_E(me_indices);
        for (const auto& b : B) e.insert(b);
        return e;
      }
      return visible;
    };

    std::vector<JudgementRecord> records;
    auto run_one = [&](const std::string& name, const std::set<std::string>& B, FormulaId phi) {
      Judgement j;
      j.model = &l;
      j.B = b_csv.empty() ? B : split_names(b_csv);
      j.E = base_E(j.B);
      for (const auto& b : j.B) j.E.insert(b);
      j.cc = make_criterion(cc, l, tasks_spec);
      j.phi = phi;
      j.store = &store;
      records.push_back({name, j, complete_paths_semantics(j)});
    };

    if (!phi_text.empty()) {
      run_one("phi", {}, parse_formula(store, phi_text));
    } else if (!req_name.empty()) {
      std::vector<std::string> indices =
          req_name.rfind("FS", 0) == 0 ? std::vector<std::string>{"1", "2"} : me_indices;
      if (indices.empty()) throw std::runtime_error("no process indices found in the model");
      std::string i = idx_i.empty() ? indices.front() : idx_i;
      std::string jj = idx_j.empty() ? (indices.size() > 1 ? indices[1] : i) : idx_j;
      RequirementSpec spec = requirement(store, req_name, i, jj, indices);
      run_one(req_name + "(" + i + ")", spec.blocking, spec.formula);
    } else if (suite == "ME") {
      if (me_indices.empty()) throw std::runtime_error("no ln_* actions found in the model");
      for (const auto& rn : {"ME1", "ME2", "ME3", "ME4", "ME5", "ME6"}) {
        for (const auto& i : me_indices) {
          if (std::string(rn) == "ME2") {
            for (const auto& jx : me_indices) {
              if (jx == i) continue;
              RequirementSpec spec = requirement(store, rn, i, jx, me_indices);
              run_one(std::string(rn) + "(" + i + "," + jx + ")", spec.blocking, spec.formula);
            }
          } else {
            RequirementSpec spec = requirement(store, rn, i, i, me_indices);
            run_one(std::string(rn) + "(" + i + ")", spec.blocking, spec.formula);
          }
        }
      }
    } else if (suite == "FS") {
      std::vector<std::string> indices{"1", "2"};
      for (const auto& rn : {"FS1", "FS2", "FS3p", "FS4"}) {
        for (const auto& i : indices) {
          RequirementSpec spec = requirement(store, rn, i, i, indices);
          run_one(std::string(rn) + "(" + i + ")", spec.blocking, spec.formula);
        }
      }
      for (const auto& i : indices) {
        Verdict v = check_counting_fs3(l, "r" + i, "t" + i, fs3_cap);
        Judgement j;
        j.model = &l;
        j.store = &store;
        j.phi = store.tru();
        j.cc = Criterion::progress();
        records.push_back({"FS3(" + i + ") [counter]", j, v});
      }
    } else {
      throw std::runtime_error("check needs --phi, --req or --suite");
    }

    bool all_hold = true;
    for (const auto& r : records) all_hold = all_hold && r.v.holds;
    if (format == "json") {
      nlohmann::ordered_json out;
      out["model"] = lm.label;
      out["judgements"] = nlohmann::ordered_json::array();
      for (const auto& r : records) out["judgements"].push_back(record_json(l, r, store));
      out["holds"] = all_hold;
      *os << out.dump(2) << "\n";
    } else {
      for (const auto& r : records) print_text(l, r, store);
      *os << (all_hold ? "all judgements hold" : "some judgements fail") << "\n";
    }
    return all_hold ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
