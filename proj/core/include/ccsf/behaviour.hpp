#ifndef CCSF_BEHAVIOUR_HPP
#define CCSF_BEHAVIOUR_HPP

#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "ccsf/lts.hpp"
#include "ccsf/ruleset.hpp"
#include "ccsf/term.hpp"

namespace ccsf {

// Interned behaviour signatures for closed terms under a fixed rule set.
//
// Every closed term here has finite depth and the transition relation
// strictly decreases depth, so the unfolding of a term is a finite tree.
// Two terms are bisimilar exactly when their trees, with children taken as
// sets, are equal. id() computes that set-tree bottom-up and interns it;
// equal ids therefore mean bisimilar terms. Tests cross-check this against
// partition refinement and a naive fixed-point oracle.
class BehCtx {
 public:
  explicit BehCtx(RuleSet rs) : rs_(rs) {}

  // Behaviour id of a closed term; id 0 is the deadlocked behaviour.
  int id(const TermPtr& p);
  bool equivalent(const TermPtr& p, const TermPtr& q) { return id(p) == id(q); }

  int depth_of(int beh) const { return meta_[beh].depth; }
  int norm_of(int beh) const { return meta_[beh].norm; }
  const std::set<Act>& initials_of(int beh) const { return meta_[beh].init; }

  // Moves of an interned behaviour (sorted, deduplicated).
  const std::vector<std::pair<Act, int>>& moves_of(int beh) const;

  const RuleSet& rules() const { return rs_; }
  size_t distinct_behaviours() const { return meta_.size(); }

 private:
  struct Meta {
    int depth = 0;
    int norm = 0;
    std::set<Act> init;
  };

  int intern(std::vector<std::pair<Act, int>> sig);

  RuleSet rs_;
  std::map<std::vector<std::pair<Act, int>>, int> intern_;
  std::vector<std::vector<std::pair<Act, int>>> sigs_;
  std::vector<Meta> meta_;
  struct Key {
    TermPtr t;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const { return k.t->hash; }
  };
  struct KeyEq {
    bool operator()(const Key& a, const Key& b) const;
  };
  std::unordered_map<Key, int, KeyHash, KeyEq> memo_;
};

}  // namespace ccsf

#endif
