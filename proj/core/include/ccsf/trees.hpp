#ifndef CCSF_TREES_HPP
#define CCSF_TREES_HPP

#include <vector>

#include "ccsf/term.hpp"

namespace ccsf {

// Enumerates synchronisation trees: closed terms over {0, prefix, +} only.
// Every finite process is bisimilar to such a tree, so soundness of an
// equation only needs to be checked over substitutions into this set.
//
// Bounds: depth <= max_depth, at most max_width summands under any sum
// node, and at most max_prefixes prefix operators in the whole tree. The
// trees are canonical with pairwise-distinct summands, so distinct results
// are pairwise non-bisimilar (deduplication modulo bisimilarity).
//
// The prefix budget keeps exhaustive substitution sweeps tractable; the
// depth-bounded space without it grows astronomically at depth 3. All
// counterexample shapes exercised by the test suite fit in the defaults.
struct SyncTreeEnumerator {
  int max_depth = 3;
  int max_width = 3;
  int max_prefixes = 4;

  // All trees within bounds, in a fixed deterministic order starting at 0.
  std::vector<TermPtr> all() const;
};

}  // namespace ccsf

#endif
