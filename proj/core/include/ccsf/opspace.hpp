#ifndef CCSF_OPSPACE_HPP
#define CCSF_OPSPACE_HPP

#include <string>
#include <vector>

#include "ccsf/ruleset.hpp"

namespace ccsf {

enum class DistClass { First, Second, Neither };
std::string dist_name(DistClass d);

// Which witness-family construction applies to a rule set.
enum class Family {
  RenamingOfPar,   // all rules on both sides, both syncs: f is || renamed
  HennessyMerge,   // distributes in one argument, both syncs
  AllLeft,         // every action one-sided, single sync
  BothSides,       // some visible action has the rule on both sides
  OpposedSync,     // visible actions on opposite sides, sync fires for f
  OpposedNoSync,   // visible actions on opposite sides, sync blocked
  TauOpposite,     // both visible actions on one side, tau on the other
  Unassigned,
};
std::string family_name(const Family f);

struct OperatorClass {
  DistClass dist = DistClass::Neither;
  Family family = Family::Unassigned;
  // Parameter action of the family construction (the `alpha` of the
  // witness terms). Tau-family: the visible action used in the ladder.
  Act alpha = Act::A;
  // True when the canonical construction applies to the transposed
  // operator f(y,x); witness terms get their f-arguments swapped.
  bool mirrored = false;
  std::string diagnostic;  // set for Unassigned
};

// All 81 admissible rule sets in a fixed deterministic order:
// left/right flag triples iterate (a, a', tau) x {left, right, both}
// outermost-first, then sync in order {a/a'}, {a'/a}, both.
std::vector<RuleSet> enumerate_admissible();

// With n complementary action pairs the count is 3^(3n+1).
long admissible_count_formula(int pairs);

// First iff no action has a right rule; Second iff none has a left rule.
DistClass classify_distributivity(const RuleSet& rs);

// Total case assignment over validated rule sets; Unassigned never fires
// for admissible input (tested over all 81).
OperatorClass dispatch(const RuleSet& rs);

}  // namespace ccsf

#endif
