#ifndef CCSF_DERIVE_HPP
#define CCSF_DERIVE_HPP

#include <string>

#include "ccsf/eqlogic.hpp"

namespace ccsf {

struct DeriveLimits {
  int max_term_size = 30;
  int max_steps = 8;             // axiom applications along the chain
  size_t node_budget = 2000000;  // explored canonical terms per side
};

enum class DeriveVerdict {
  Derivable,  // proof found and returned
  Exhausted,  // certified: no proof within the limits
  Capped,     // node budget hit before the space was exhausted
};

struct DeriveResult {
  DeriveVerdict verdict;
  ProofPtr proof;  // Derivable only
  std::string note;
  long explored = 0;
};

// Bounded derivability of a closed goal from a symmetry-closed axiom
// system: bidirectional breadth-first rewriting closure over canonical
// terms, axioms applied at every position with AC matching (variables in
// sum patterns match sub-multisets of summands).
//
// Every term along the chain must have size <= max_term_size; a goal whose
// own sides exceed the cap is Exhausted outright, since any proof contains
// the goal sides. When the system is saturated and contains the standard
// axioms the search runs over nil-clean terms modulo idempotence of +
// (goals are stripped first and the glue proofs are emitted): a saturated
// system proves a nil-clean equation iff it has a nil-clean proof, and
// idempotence steps commute with the rest, so the quotient search stays
// complete and the Exhausted verdict certifies slightly more than asked.
//
// Throws std::invalid_argument if e is not symmetry-closed or the goal is
// open.
DeriveResult bounded_derivable(const AxiomSystem& e, const Equation& goal,
                               const DeriveLimits& limits = {});

}  // namespace ccsf

#endif
