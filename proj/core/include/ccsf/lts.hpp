#ifndef CCSF_LTS_HPP
#define CCSF_LTS_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ccsf/ruleset.hpp"
#include "ccsf/term.hpp"

namespace ccsf {

class OpenTermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StateCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One-step derivatives of a closed term. Targets are AC-canonical and the
// result is deduplicated and sorted. Throws OpenTermError on open input.
std::vector<std::pair<Act, TermPtr>> step(const RuleSet& rs, const TermPtr& p);

// Same rules applied to a possibly open term; variables afford no moves.
std::vector<std::pair<Act, TermPtr>> step_term(const RuleSet& rs,
                                               const TermPtr& t);

struct Lts {
  std::vector<TermPtr> states;  // canonical, states[root] is the start
  std::vector<std::tuple<uint32_t, Act, uint32_t>> transitions;
  uint32_t root = 0;

  std::vector<std::vector<std::pair<Act, uint32_t>>> out() const;
};

constexpr size_t kDefaultStateCap = 1000000;

// Reachable-state closure of step. Deterministic given the canonical term
// order. Throws StateCapError past the cap.
Lts build_lts(const RuleSet& rs, const TermPtr& p,
              size_t state_cap = kDefaultStateCap);

// Length of a longest trace. Transitions strictly decrease depth, so every
// LTS built here is acyclic and this is a longest-path computation.
int depth(const RuleSet& rs, const TermPtr& p);
// Length of a shortest maximal trace (a trace ending in a deadlocked state).
int norm(const RuleSet& rs, const TermPtr& p);
std::set<Act> initials(const RuleSet& rs, const TermPtr& p);
// All traces of p; finite because the LTS is finite and acyclic.
std::set<std::vector<Act>> traces(const RuleSet& rs, const TermPtr& p);

// Head normal form: the sum over step(rs,p) of mu.target, in canonical
// order; 0 when p is deadlocked. One expansion level, not recursive.
TermPtr expand_par(const RuleSet& rs, const TermPtr& p);

}  // namespace ccsf

#endif
