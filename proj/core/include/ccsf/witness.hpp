#ifndef CCSF_WITNESS_HPP
#define CCSF_WITNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ccsf/eqlogic.hpp"
#include "ccsf/opspace.hpp"
#include "ccsf/ruleset.hpp"
#include "ccsf/term.hpp"

namespace ccsf {

// mu + mu^2 + ... + mu^i; the empty sum (i = 0) is 0. Depth i, norm 1.
TermPtr ladder(Act mu, int i);
// mu.mu. ... .0 with k prefixes.
TermPtr chain(Act mu, int k);

// nu.mu^{<=i0} + ... + nu.mu^{<=n}.
TermPtr ladder_sum(Act nu, Act mu, int n, int index_origin = 0);

struct WitnessFamily {
  Family family;
  Act alpha;
  bool mirrored = false;
  int n = 0;
  TermPtr witness;  // the f(mu, .) process; left-hand side of the equation
  Equation en;
};

// Witness process and equation for the given case and index. The sum
// index starts at index_origin (0 by default; 1 drops the initial
// depth-one summand, which changes nothing up to bisimilarity of the
// interesting identities). Rejects RenamingOfPar/HennessyMerge.
WitnessFamily witness_terms(const OperatorClass& oc, int n,
                            int index_origin = 0);

struct FamilyVerdict {
  int n = 0;
  bool equation_holds = false;
  bool lhs_has_witness_summand = false;
  bool rhs_has_witness_summand = false;
  int lhs_depth = 0;
  bool extra_holds = false;  // case-specific identity, see extra
  std::string extra;         // description of the extra identity
  std::vector<std::string> counterexample;  // distinguishing trace if any
};

// Verifies e_n for n = 0..n_max under rs plus the case-specific identity:
// primality of the witness for the one-sided and blocked-sync cases, and
// witness ~ mu || ladder-sum for the others.
std::vector<FamilyVerdict> verify_family(const RuleSet& rs,
                                         const OperatorClass& oc, int n_max,
                                         int index_origin = 0);

// True iff some summand of p is bisimilar to w.
bool has_witness_summand(const RuleSet& rs, const TermPtr& p,
                         const TermPtr& w);

struct WnReport {
  long trials = 0;
  long checked = 0;  // instances within the preservation claim's scope
  long violations = 0;
  std::vector<std::string> details;  // offending derivations, if any
};

// Property experiment: instantiates axioms of e with closed substitutions
// biased to contain witness-shaped pieces, optionally wraps both sides in
// one congruence context, and checks that having a summand bisimilar to
// the witness is preserved. The preservation claim is scoped to provable
// equations whose sides are bisimilar to the witness and have no 0
// summands or factors; out-of-scope instances count as trials only.
// e must pass a soundness pre-check and n must exceed the size of every
// term in e; throws std::invalid_argument otherwise.
WnReport wn_preservation_experiment(const RuleSet& rs, const AxiomSystem& e,
                                    int n, long trials, uint64_t seed);

}  // namespace ccsf

#endif
