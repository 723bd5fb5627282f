#ifndef CCSF_PRIME_HPP
#define CCSF_PRIME_HPP

#include <map>
#include <vector>

#include "ccsf/behaviour.hpp"
#include "ccsf/ruleset.hpp"
#include "ccsf/term.hpp"
#include "ccsf/trees.hpp"

namespace ccsf {

class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed term is prime when it is not bisimilar to 0 and not bisimilar
// to q || r for any q, r both not bisimilar to 0.
//
// Candidate factors are the enumerator trees of fitting depth together
// with the reachable states of the term under test. The states make the
// search complete: if p ~ q || r then running a maximal trace of r by
// pure interleaving shows q is bisimilar to a reachable state of p, and
// symmetrically for r. Depth splits additively over ||, and the initial
// actions of q || r are determined by those of the parts, which prunes
// almost every pair before the behaviour comparison.
class FactorSearch {
 public:
  FactorSearch(BehCtx& ctx, SyncTreeEnumerator trees);

  // All behaviour-distinct splits p ~ q || r with both parts proper.
  // Throws BoundsError when depth(p) exceeds the enumerator depth bound.
  std::vector<std::pair<TermPtr, TermPtr>> pairs(const TermPtr& p);

  bool prime(const TermPtr& p);

  // Multiset of primes composing to p; empty for p ~ 0. Memoised per
  // behaviour.
  std::vector<TermPtr> decompose(const TermPtr& p);

 private:
  struct Candidate {
    TermPtr term;
    int depth;
    uint8_t init;       // bitmask over actions
    bool sync_with(const Candidate& o) const;
  };

  void offer(int beh, const TermPtr& t);

  BehCtx& ctx_;
  SyncTreeEnumerator bounds_;
  std::map<int, Candidate> cands_;  // by behaviour id, 0 excluded
  std::map<int, std::vector<TermPtr>> decomposed_;
};

// One-shot wrappers over a fresh context.
bool is_prime(const RuleSet& rs, const TermPtr& p,
              const SyncTreeEnumerator& factors);
std::vector<TermPtr> prime_decompose(const RuleSet& rs, const TermPtr& p,
                                     const SyncTreeEnumerator& factors);
std::vector<std::pair<TermPtr, TermPtr>> factor_pairs(
    const RuleSet& rs, const TermPtr& p, const SyncTreeEnumerator& factors);

}  // namespace ccsf

#endif
