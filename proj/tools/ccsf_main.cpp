// Command-line frontend: JSON reports on stdout, diagnostics on stderr.
// Exit codes: 0 verdict-positive, 1 verdict-negative, 2 usage/input error.

#include <atomic>
#include <chrono>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "ccsf/behaviour.hpp"
#include "ccsf/bisim.hpp"
#include "ccsf/derive.hpp"
#include "ccsf/eqlogic.hpp"
#include "ccsf/lts.hpp"
#include "ccsf/openterm.hpp"
#include "ccsf/opspace.hpp"
#include "ccsf/parser.hpp"
#include "ccsf/prime.hpp"
#include "ccsf/ruleset.hpp"
#include "ccsf/transform.hpp"
#include "ccsf/trees.hpp"
#include "ccsf/witness.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace ccsf;

namespace {

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

json subst_json(const Subst& s) {
  json j = json::object();
  for (auto& [k, v] : s) j[k] = to_string(v);
  return j;
}

void emit(json& report, const Clock& clk) {
  report["timing_ms"] = clk.ms();
  std::cout << report.dump(2) << "\n";
}

Equation parse_equation(const std::string& text) {
  size_t sep = text.find('=');
  if (sep == std::string::npos)
    throw std::runtime_error("equation needs a '=' separator");
  return {parse_term(text.substr(0, sep)), parse_term(text.substr(sep + 1))};
}

json rule_set_json(const RuleSet& rs) { return json::parse(rule_set_to_json(rs)); }

json classify_json(const RuleSet& rs) {
  OperatorClass oc = dispatch(rs);
  json j;
  j["distributivity"] = dist_name(oc.dist);
  j["family"] = family_name(oc.family);
  j["alpha"] = act_name(oc.alpha);
  j["mirrored"] = oc.mirrored;
  if (!oc.diagnostic.empty()) j["diagnostic"] = oc.diagnostic;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for CCS extended with one configurable binary "
               "operator"};
  app.require_subcommand(1);

  uint64_t seed = 1;
  int jobs = 1;
  app.add_option("--seed", seed, "seed for randomised subcommands");
  app.add_option("--jobs", jobs, "worker threads where supported");

  std::string rules_path, axioms_path;
  std::string arg1, arg2;
  size_t cap = kDefaultStateCap;
  SyncTreeEnumerator en;
  int opt_n = 5;
  DeriveLimits dl;
  bool emit_terms = false;
  int index_origin = 0;
  std::string case_name = "auto";

  auto add_rules = [&](CLI::App* c) {
    c->add_option("--rules", rules_path, "rule set JSON file")->required();
  };
  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--depth", en.max_depth, "tree enumeration depth bound");
    c->add_option("--width", en.max_width, "summands per sum node");
    c->add_option("--prefixes", en.max_prefixes, "total prefixes per tree");
  };

  CLI::App* c_parse = app.add_subcommand("parse", "parse and echo a term");
  c_parse->add_option("term", arg1)->required();

  CLI::App* c_lts = app.add_subcommand("lts", "build the transition system");
  add_rules(c_lts);
  c_lts->add_option("term", arg1)->required();
  c_lts->add_option("--cap", cap, "state cap");

  CLI::App* c_bisim = app.add_subcommand("bisim", "decide bisimilarity");
  add_rules(c_bisim);
  c_bisim->add_option("left", arg1)->required();
  c_bisim->add_option("right", arg2)->required();

  CLI::App* c_sound =
      app.add_subcommand("sound", "bounded soundness of an equation");
  add_rules(c_sound);
  c_sound->add_option("equation", arg1, "form: lhs = rhs")->required();
  add_bounds(c_sound);

  CLI::App* c_axioms =
      app.add_subcommand("axioms", "bounded soundness of an axiom file");
  add_rules(c_axioms);
  c_axioms->add_option("--axioms", axioms_path, "axiom file")->required();
  add_bounds(c_axioms);

  CLI::App* c_enum =
      app.add_subcommand("enumerate", "all admissible rule sets, one per line");

  CLI::App* c_classify = app.add_subcommand("classify", "classify a rule set");
  add_rules(c_classify);

  CLI::App* c_witness =
      app.add_subcommand("witness", "witness equation family checks");
  add_rules(c_witness);
  c_witness->add_option("--n", opt_n, "verify e_n for n = 0..N");
  c_witness->add_option("--case", case_name, "auto (from the rule set)");
  c_witness->add_flag("--emit-terms", emit_terms, "print the equations");
  c_witness->add_option("--index-origin", index_origin, "sum index origin 0|1");

  CLI::App* c_prove =
      app.add_subcommand("prove", "bounded derivability from an axiom file");
  c_prove->add_option("--axioms", axioms_path, "axiom file")->required();
  c_prove->add_option("goal", arg1, "form: lhs = rhs")->required();
  c_prove->add_option("--max-size", dl.max_term_size, "term size cap");
  c_prove->add_option("--max-depth", dl.max_steps, "axiom steps cap");

  CLI::App* c_decomp =
      app.add_subcommand("decompose", "prime decomposition of a closed term");
  add_rules(c_decomp);
  c_decomp->add_option("term", arg1)->required();
  add_bounds(c_decomp);

  CLI::App* c_open =
      app.add_subcommand("open-step", "auxiliary transitions of an open term");
  add_rules(c_open);
  c_open->add_option("term", arg1)->required();

  CLI::App* c_trt = app.add_subcommand(
      "trt", "modes and actions for which a variable can initiate moves");
  add_rules(c_trt);
  c_trt->add_option("var", arg1)->required();
  c_trt->add_option("term", arg2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  Clock clk;
  json report;
  try {
    if (*c_parse) {
      TermPtr t = parse_term(arg1);
      report["command"] = "parse";
      report["term"] = to_string(t);
      report["canonical"] = to_string(canon(t));
      report["size"] = t->size;
      report["closed"] = t->closed;
      json vars = json::array();
      for (const auto& v : free_vars(t)) vars.push_back(v);
      report["vars"] = vars;
      emit(report, clk);
      return 0;
    }
    if (*c_lts) {
      RuleSet rs = load_rule_set(rules_path);
      TermPtr t = parse_term(arg1);
      Lts lts = build_lts(rs, t, cap);
      report["command"] = "lts";
      report["states"] = lts.states.size();
      report["transitions"] = json::array();
      for (auto& [s, a, d] : lts.transitions)
        report["transitions"].push_back({{"from", to_string(lts.states[s])},
                                         {"action", act_name(a)},
                                         {"to", to_string(lts.states[d])}});
      report["depth"] = depth(rs, t);
      report["norm"] = norm(rs, t);
      json init = json::array();
      for (Act a : initials(rs, t)) init.push_back(act_name(a));
      report["initials"] = init;
      emit(report, clk);
      return 0;
    }
    if (*c_bisim) {
      RuleSet rs = load_rule_set(rules_path);
      BisimResult r = bisim(rs, parse_term(arg1), parse_term(arg2));
      report["command"] = "bisim";
      report["equivalent"] = r.equivalent;
      if (!r.equivalent) report["witness"] = r.witness;
      if (r.equivalent) report["partition_blocks"] = r.partition.size();
      emit(report, clk);
      return r.equivalent ? 0 : 1;
    }
    if (*c_sound) {
      RuleSet rs = load_rule_set(rules_path);
      Equation eq = parse_equation(arg1);
      SoundVerdict v = sound(rs, eq, en);
      report["command"] = "sound";
      report["refuted"] = v.refuted;
      report["combinations"] = v.combinations;
      if (v.refuted) report["counterexample"] = subst_json(v.counterexample);
      emit(report, clk);
      return v.refuted ? 1 : 0;
    }
    if (*c_axioms) {
      RuleSet rs = load_rule_set(rules_path);
      AxiomSystem e = load_axioms(axioms_path);
      report["command"] = "axioms";
      report["verdicts"] = json::array();
      bool any_refuted = false;
      for (const AxiomVerdict& av : sound_axioms(rs, e, en)) {
        json j;
        j["axiom"] = av.name;
        j["refuted"] = av.verdict.refuted;
        if (av.verdict.refuted) {
          j["counterexample"] = subst_json(av.verdict.counterexample);
          any_refuted = true;
        }
        report["verdicts"].push_back(j);
      }
      emit(report, clk);
      return any_refuted ? 1 : 0;
    }
    if (*c_enum) {
      int idx = 0;
      for (const RuleSet& rs : enumerate_admissible()) {
        json j = rule_set_json(rs);
        j["index"] = idx++;
        j["class"] = classify_json(rs);
        std::cout << j.dump() << "\n";
      }
      return 0;
    }
    if (*c_classify) {
      RuleSet rs = load_rule_set(rules_path);
      report["command"] = "classify";
      report["rules"] = rule_set_json(rs);
      report["class"] = classify_json(rs);
      emit(report, clk);
      return 0;
    }
    if (*c_witness) {
      RuleSet rs = load_rule_set(rules_path);
      if (case_name != "auto")
        std::cerr << "note: the case is always resolved from the rule set\n";
      OperatorClass oc = dispatch(rs);
      report["command"] = "witness";
      report["class"] = classify_json(rs);
      report["verdicts"] = json::array();
      std::vector<FamilyVerdict> vs;
      if (jobs > 1) {
        vs.resize(static_cast<size_t>(opt_n) + 1);
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < jobs; ++w)
          pool.emplace_back([&] {
            for (int n = next++; n <= opt_n; n = next++)
              vs[n] = verify_family(rs, oc, n, index_origin).back();
          });
        for (auto& th : pool) th.join();
      } else {
        vs = verify_family(rs, oc, opt_n, index_origin);
      }
      bool all_ok = true;
      for (const FamilyVerdict& v : vs) {
        json j;
        j["n"] = v.n;
        j["equation_holds"] = v.equation_holds;
        j["lhs_has_witness_summand"] = v.lhs_has_witness_summand;
        j["rhs_has_witness_summand"] = v.rhs_has_witness_summand;
        j["lhs_depth"] = v.lhs_depth;
        j["extra"] = v.extra;
        j["extra_holds"] = v.extra_holds;
        if (!v.counterexample.empty()) j["counterexample"] = v.counterexample;
        if (emit_terms) {
          WitnessFamily wf = witness_terms(oc, v.n, index_origin);
          j["lhs"] = to_string(wf.en.lhs);
          j["rhs"] = to_string(wf.en.rhs);
        }
        all_ok = all_ok && v.equation_holds && v.lhs_has_witness_summand &&
                 !v.rhs_has_witness_summand && v.extra_holds;
        report["verdicts"].push_back(j);
      }
      emit(report, clk);
      return all_ok ? 0 : 1;
    }
    if (*c_prove) {
      AxiomSystem e = load_axioms(axioms_path);
      AxiomSystem closed = saturate(symmetry_close(e));
      if (closed.axioms.size() != e.axioms.size())
        std::cerr << "note: axiom system extended to its symmetry closure "
                     "and saturation ("
                  << closed.axioms.size() << " axioms)\n";
      Equation goal = parse_equation(arg1);
      DeriveResult r = bounded_derivable(closed, goal, dl);
      report["command"] = "prove";
      report["explored"] = r.explored;
      if (!r.note.empty()) report["note"] = r.note;
      switch (r.verdict) {
        case DeriveVerdict::Derivable: {
          report["verdict"] = "derivable";
          report["proof_nodes"] = proof_nodes(r.proof);
          CheckResult cr = check_proof(closed, r.proof);
          report["proof_checked"] = cr.ok;
          break;
        }
        case DeriveVerdict::Exhausted:
          report["verdict"] = "exhausted";
          break;
        case DeriveVerdict::Capped:
          report["verdict"] = "resource-capped";
          break;
      }
      emit(report, clk);
      return r.verdict == DeriveVerdict::Derivable ? 0 : 1;
    }
    if (*c_decomp) {
      RuleSet rs = load_rule_set(rules_path);
      TermPtr t = parse_term(arg1);
      if (en.max_depth < depth(rs, t)) en.max_depth = depth(rs, t);
      report["command"] = "decompose";
      report["factors"] = json::array();
      for (const TermPtr& f : prime_decompose(rs, t, en))
        report["factors"].push_back(to_string(f));
      emit(report, clk);
      return 0;
    }
    if (*c_open) {
      RuleSet rs = load_rule_set(rules_path);
      TermPtr t = parse_term(arg1);
      report["command"] = "open-step";
      report["transitions"] = json::array();
      for (auto& [lab, cfg] : aux_step(rs, t))
        report["transitions"].push_back({{"var", lab.var},
                                         {"mode", mode_name(lab.mode)},
                                         {"action", act_name(lab.act)},
                                         {"config", to_string(cfg)}});
      emit(report, clk);
      return 0;
    }
    if (*c_trt) {
      RuleSet rs = load_rule_set(rules_path);
      TermPtr t = parse_term(arg2);
      report["command"] = "trt";
      report["holds"] = json::array();
      for (Mode m : {Mode::L, Mode::R, Mode::B})
        for (Act a : kAllActs)
          if (trt(rs, arg1, m, a, t))
            report["holds"].push_back(
                {{"mode", mode_name(m)}, {"action", act_name(a)}});
      emit(report, clk);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "syntax error " << e.what() << "\n";
    return 2;
  } catch (const StateCapError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
