#include "ccsf/catalog.hpp"

#include <stdexcept>

#include "ccsf/parser.hpp"

namespace ccsf {

namespace {

Axiom ax(const std::string& name, const std::string& l, const std::string& r) {
  return {name, {parse_term(l), parse_term(r)}};
}

}  // namespace

AxiomSystem axiom_catalog() {
  AxiomSystem e;
  e.name = "catalog";
  e.axioms = {
      ax("A1", "x + x", "x"),
      ax("A2", "x + y", "y + x"),
      ax("A3", "(x + y) + z", "x + (y + z)"),
      ax("A4", "x + 0", "x"),
      ax("F0", "f(0, 0)", "0"),
      ax("F1", "f(0, x)", "0"),
      ax("F2", "f(x, 0)", "x"),
      ax("F3", "f(x, 0)", "0"),
      ax("F4", "f(0, x)", "x"),
      ax("F5", "f(0, a'.x + w)", "f(0, w)"),
      ax("F6", "f(0, tau.x + w)", "f(0, w)"),
      ax("F7", "f(0, a.x + w)", "f(0, w)"),
      ax("F8", "f(a'.x + w, 0)", "f(w, 0)"),
      ax("F9", "f(tau.x + w, 0)", "f(w, 0)"),
      ax("F10", "f(a.x + w, 0)", "f(w, 0)"),
      ax("F11", "f(a'.x + w, tau.y)", "f(w, tau.y)"),
      ax("F12", "f(a'.x, tau.y + w)", "f(a'.x, w)"),
      ax("F13", "f(a'.x + w, a.y)", "f(w, a.y)"),
      ax("F14", "f(a'.x, a.y + w)", "f(a'.x, w)"),
      ax("F15", "f(a'.x, tau.y)", "0"),
      ax("F16", "f(a'.x, a.y)", "0"),
      ax("F17", "f(a.x + w, a'.y)", "f(w, a'.y)"),
      ax("F18", "f(a.x, a'.y + w)", "f(a.x, w)"),
      ax("F19", "f(tau.x + w, a'.y)", "f(w, a'.y)"),
      ax("F20", "f(tau.x, a'.y + w)", "f(tau.x, w)"),
      ax("F21", "f(a.x, a'.y)", "0"),
      ax("F22", "f(tau.x, a'.y)", "0"),
      ax("F23", "f(tau.x + w, a.y)", "f(w, a.y)"),
      ax("F24", "f(tau.x, a.y + w)", "f(tau.x, w)"),
      ax("F25", "f(tau.x, a.y)", "0"),
      ax("F26", "f(a.x + w, tau.y)", "f(w, tau.y)"),
      ax("F27", "f(a.x, tau.y + w)", "f(a.x, w)"),
      ax("F28", "f(a.x, tau.y)", "0"),
  };
  return e;
}

AxiomSystem catalog_selection(const std::vector<std::string>& names,
                              const std::string& system_name) {
  AxiomSystem cat = axiom_catalog();
  AxiomSystem e;
  e.name = system_name;
  for (const std::string& n : names) {
    bool found = false;
    for (const Axiom& a : cat.axioms)
      if (a.name == n) {
        e.axioms.push_back(a);
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown catalog axiom " + n);
  }
  return e;
}

AxiomSystem group_system(const AxiomGroup& g) {
  return catalog_selection(g.axioms, g.id);
}

std::vector<AxiomGroup> axiom_groups() {
  using V = std::vector<std::string>;
  auto rs = [](const std::vector<std::string>& l,
               const std::vector<std::string>& r,
               const std::vector<std::string>& s) {
    return make_rule_set(l, r, s);
  };
  const std::vector<std::string> all = {"a", "a'", "tau"};
  const std::vector<std::string> none = {};
  const std::vector<std::string> sab = {"a/a'"};
  const std::vector<std::string> sba = {"a'/a"};
  std::vector<AxiomGroup> gs;
  auto add = [&](const std::string& id, RuleSet r, V axioms) {
    gs.push_back({id, r, std::move(axioms)});
  };
  // groups whose soundness is insensitive to the sync choice carry the
  // a/a' representative
  add("common", rs(all, none, sab), {"A1", "A2", "A3", "A4", "F0"});
  add("g01", rs(all, none, sab), {"F1", "F2"});
  add("g02", rs(none, all, sab), {"F3", "F4"});
  add("g03", rs(all, {"a"}, sab), {"F5", "F6", "F2"});
  add("g04", rs(all, {"a'"}, sab), {"F7", "F2", "F6"});
  add("g05", rs(all, {"tau"}, sab), {"F2", "F5", "F7"});
  add("g06", rs({"a"}, all, sab), {"F8", "F9", "F4"});
  add("g07", rs({"a'"}, all, sab), {"F10", "F4", "F9"});
  add("g08", rs({"tau"}, all, sab), {"F4", "F8", "F10"});
  add("g09", rs(all, {"a", "a'"}, sab), {"F2", "F6"});
  add("g10", rs(all, {"a", "tau"}, sab), {"F2", "F5"});
  add("g11", rs(all, {"a'", "tau"}, sab), {"F2", "F7"});
  add("g12", rs({"a", "a'"}, all, sab), {"F4", "F9"});
  add("g13", rs({"a", "tau"}, all, sab), {"F4", "F8"});
  add("g14", rs({"a'", "tau"}, all, sab), {"F4", "F10"});
  add("g15", rs({"a", "tau"}, {"a'"}, sab),
      {"F11", "F12", "F13", "F14", "F15", "F16", "F6", "F7", "F8"});
  add("g16", rs({"a", "tau"}, {"a'"}, sba),
      {"F6", "F7", "F8", "F11", "F12", "F15"});
  add("g17", rs({"a", "tau"}, {"a", "a'"}, sab),
      {"F6", "F8", "F11", "F12", "F15"});
  add("g18", rs({"a", "tau"}, {"a'", "tau"}, sab),
      {"F7", "F8", "F13", "F14", "F16"});
  add("g19", rs({"a", "tau"}, {"a'", "tau"}, sba), {"F7", "F8"});
  add("g20", rs({"a'"}, {"a", "tau"}, sba),
      {"F17", "F18", "F19", "F20", "F21", "F22", "F5", "F9", "F10"});
  add("g21", rs({"a'"}, {"a", "tau"}, sab),
      {"F5", "F9", "F10", "F19", "F20", "F22"});
  add("g22", rs({"a'", "a"}, {"a", "tau"}, sab), {"F9", "F19", "F20", "F22"});
  // one-step blocking of a leading a.x on the left needs the a'/a sync;
  // under a/a' the a.x summand synchronises and F17/F18/F21 fail
  add("g23", rs({"a'", "tau"}, {"a", "tau"}, sba),
      {"F5", "F10", "F17", "F18", "F21"});
  add("g24", rs({"a'", "tau"}, {"a", "tau"}, sab), {"F5", "F10"});
  add("g25", rs({"a"}, {"a'", "tau"}, sab),
      {"F23", "F24", "F25", "F7", "F8", "F9", "F13", "F14", "F16"});
  add("g26", rs({"a"}, {"a'", "tau"}, sba),
      {"F7", "F8", "F9", "F23", "F24", "F25"});
  add("g27", rs({"tau"}, {"a", "a'"}, sab),
      {"F26", "F27", "F28", "F6", "F8", "F10", "F11", "F12", "F15"});
  add("g28", rs({"a'", "tau"}, {"a"}, sba),
      {"F5", "F6", "F10", "F17", "F18", "F21", "F26", "F27", "F28"});
  add("g29", rs({"a'", "tau"}, {"a"}, sab),
      {"F5", "F6", "F10", "F26", "F27", "F28"});
  add("g30", rs({"a", "a'"}, {"tau"}, sab),
      {"F5", "F7", "F9", "F19", "F20", "F22", "F23", "F24", "F25"});
  add("g31", rs({"a", "a'"}, {"a'", "tau"}, sab),
      {"F7", "F9", "F23", "F24", "F25"});
  add("g32", rs({"a'", "tau"}, {"a", "a'"}, sab),
      {"F6", "F10", "F26", "F27", "F28"});
  return gs;
}

}  // namespace ccsf
