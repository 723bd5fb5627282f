#include "ccsf/prime.hpp"

#include <algorithm>

#include "ccsf/lts.hpp"

namespace ccsf {

namespace {

uint8_t init_mask(const std::set<Act>& init) {
  uint8_t m = 0;
  for (Act a : init) m |= static_cast<uint8_t>(1u << static_cast<int>(a));
  return m;
}

constexpr uint8_t kA = 1u << static_cast<int>(Act::A);
constexpr uint8_t kABar = 1u << static_cast<int>(Act::ABar);
constexpr uint8_t kTau = 1u << static_cast<int>(Act::Tau);

}  // namespace

bool FactorSearch::Candidate::sync_with(const Candidate& o) const {
  return ((init & kA) && (o.init & kABar)) || ((init & kABar) && (o.init & kA));
}

FactorSearch::FactorSearch(BehCtx& ctx, SyncTreeEnumerator trees)
    : ctx_(ctx), bounds_(trees) {
  for (const TermPtr& t : trees.all()) offer(ctx_.id(t), t);
}

void FactorSearch::offer(int beh, const TermPtr& t) {
  if (beh == ctx_.id(Term::nil())) return;
  if (cands_.count(beh)) return;
  cands_.emplace(beh, Candidate{t, ctx_.depth_of(beh),
                                init_mask(ctx_.initials_of(beh))});
}

std::vector<std::pair<TermPtr, TermPtr>> FactorSearch::pairs(const TermPtr& p) {
  int pb = ctx_.id(p);
  std::vector<std::pair<TermPtr, TermPtr>> out;
  if (pb == ctx_.id(Term::nil())) return out;
  int d = ctx_.depth_of(pb);
  if (d > bounds_.max_depth)
    throw BoundsError("factor search: depth " + std::to_string(d) +
                      " exceeds the enumerator bound " +
                      std::to_string(bounds_.max_depth));
  // the reachable states complete the candidate pool for this term
  for (const TermPtr& s : build_lts(ctx_.rules(), p).states)
    offer(ctx_.id(s), s);

  uint8_t want = init_mask(ctx_.initials_of(pb));
  std::vector<const Candidate*> cs;
  cs.reserve(cands_.size());
  for (auto& [b, c] : cands_)
    if (c.depth < d) cs.push_back(&c);
  for (size_t i = 0; i < cs.size(); ++i) {
    const Candidate& q = *cs[i];
    for (size_t j = i; j < cs.size(); ++j) {
      const Candidate& r = *cs[j];
      if (q.depth + r.depth != d) continue;
      uint8_t joint = static_cast<uint8_t>(
          q.init | r.init | (q.sync_with(r) ? kTau : 0));
      if (joint != want) continue;
      if (ctx_.id(Term::par(q.term, r.term)) == pb)
        out.emplace_back(q.term, r.term);
    }
  }
  return out;
}

bool FactorSearch::prime(const TermPtr& p) {
  if (ctx_.id(p) == ctx_.id(Term::nil())) return false;
  return pairs(p).empty();
}

std::vector<TermPtr> FactorSearch::decompose(const TermPtr& p) {
  int pb = ctx_.id(p);
  if (pb == ctx_.id(Term::nil())) return {};
  auto it = decomposed_.find(pb);
  if (it != decomposed_.end()) return it->second;
  auto ps = pairs(p);
  std::vector<TermPtr> out;
  if (ps.empty()) {
    out = {p};
  } else {
    out = decompose(ps.front().first);
    for (TermPtr& t : decompose(ps.front().second)) out.push_back(std::move(t));
  }
  decomposed_.emplace(pb, out);
  return out;
}

bool is_prime(const RuleSet& rs, const TermPtr& p,
              const SyncTreeEnumerator& factors) {
  BehCtx ctx(rs);
  return FactorSearch(ctx, factors).prime(p);
}

std::vector<TermPtr> prime_decompose(const RuleSet& rs, const TermPtr& p,
                                     const SyncTreeEnumerator& factors) {
  BehCtx ctx(rs);
  return FactorSearch(ctx, factors).decompose(p);
}

std::vector<std::pair<TermPtr, TermPtr>> factor_pairs(
    const RuleSet& rs, const TermPtr& p, const SyncTreeEnumerator& factors) {
  BehCtx ctx(rs);
  return FactorSearch(ctx, factors).pairs(p);
}

}  // namespace ccsf
