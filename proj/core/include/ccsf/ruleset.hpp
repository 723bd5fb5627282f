#ifndef CCSF_RULESET_HPP
#define CCSF_RULESET_HPP

#include <string>
#include <vector>

#include "ccsf/term.hpp"

namespace ccsf {

// A candidate rule set for the binary operator f. For each action mu the
// flag in `left` says f has the rule  x1 -mu-> y1  /  f(x1,x2) -mu-> y1||x2,
// the flag in `right` the mirrored one with target x1||y2. sync_a is the
// rule  x1 -a-> y1, x2 -a'-> y2 / f(x1,x2) -tau-> y1||y2;  sync_b swaps the
// premise actions. Rule targets are fixed to these shapes.
struct RuleSet {
  uint8_t left = 0;   // bit i set: action i has the left rule
  uint8_t right = 0;  // bit i set: action i has the right rule
  bool sync_a = false;  // premises x1 -a->, x2 -a'->
  bool sync_b = false;  // premises x1 -a'->, x2 -a->

  bool has_left(Act a) const { return left & (1u << static_cast<int>(a)); }
  bool has_right(Act a) const { return right & (1u << static_cast<int>(a)); }
  void set_left(Act a) { left |= (1u << static_cast<int>(a)); }
  void set_right(Act a) { right |= (1u << static_cast<int>(a)); }

  bool operator==(const RuleSet& o) const = default;
};

struct Validation {
  bool ok = true;
  std::vector<std::string> violations;
};

// Admissibility: every action has a left or right rule, and at least one
// synchronisation rule is present.
Validation validate(const RuleSet& rs);

// Convenience constructor from action-name lists ("a", "a'", "tau") and
// sync names ("a/a'", "a'/a").
RuleSet make_rule_set(const std::vector<std::string>& left,
                      const std::vector<std::string>& right,
                      const std::vector<std::string>& sync);

// Bit-exact JSON object {"left":[..],"right":[..],"sync":[..]}.
// Unknown keys are rejected.
RuleSet rule_set_from_json(const std::string& text);
std::string rule_set_to_json(const RuleSet& rs);

RuleSet load_rule_set(const std::string& path);

// Transposes the operator: swaps left/right flags and the sync orientation.
// f'(x,y) = f(y,x) has exactly these rules.
RuleSet mirror(const RuleSet& rs);

// Renames a <-> a' everywhere (flags and sync orientation).
RuleSet rename_actions(const RuleSet& rs);

}  // namespace ccsf

#endif
