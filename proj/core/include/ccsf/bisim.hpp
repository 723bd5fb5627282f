#ifndef CCSF_BISIM_HPP
#define CCSF_BISIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "ccsf/lts.hpp"
#include "ccsf/ruleset.hpp"
#include "ccsf/term.hpp"

namespace ccsf {

struct BisimResult {
  bool equivalent = false;
  // When not equivalent: a shortest alternating move/obligation trace,
  // one line per level, describing a move one side cannot match.
  std::vector<std::string> witness;
  // When equivalent: the coarsest-bisimulation partition of the joint
  // state space, each block listing canonical term strings.
  std::vector<std::vector<std::string>> partition;
};

// Decides p ~ q by partition refinement on the joint reachable LTS.
BisimResult bisim(const RuleSet& rs, const TermPtr& p, const TermPtr& q,
                  size_t state_cap = kDefaultStateCap);

bool bisimilar(const RuleSet& rs, const TermPtr& p, const TermPtr& q);

// Naive greatest-fixed-point oracle over one Lts: starts from the full
// relation and removes pairs with an unmatched move until stable.
// Quadratic; used to cross-check the partition refinement.
std::vector<std::vector<bool>> naive_bisim_relation(const Lts& lts);

}  // namespace ccsf

#endif
