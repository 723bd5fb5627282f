#ifndef CCSF_CATALOG_HPP
#define CCSF_CATALOG_HPP

#include <string>
#include <vector>

#include "ccsf/eqlogic.hpp"
#include "ccsf/ruleset.hpp"

namespace ccsf {

// All named axioms shipped with the workbench: the + laws A1-A4, the
// absorption laws F0-F4, and the one-step blocking laws F5-F28 that hold
// when the rules for f cannot fire on a leading prefix.
AxiomSystem axiom_catalog();

// A bundle of axioms sound under every rule set with the given flags.
struct AxiomGroup {
  std::string id;       // stable identifier, also the data file stem
  RuleSet rules;        // representative rule set matching the flags
  std::vector<std::string> axioms;  // names into axiom_catalog()
};

// The soundness groups shipped under data/axioms (one file per group).
std::vector<AxiomGroup> axiom_groups();

// Resolves a group's named axioms against the catalog.
AxiomSystem group_system(const AxiomGroup& g);

// Select catalog axioms by name.
AxiomSystem catalog_selection(const std::vector<std::string>& names,
                              const std::string& system_name);

}  // namespace ccsf

#endif
