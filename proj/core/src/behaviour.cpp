#include "ccsf/behaviour.hpp"

#include <algorithm>

namespace ccsf {

bool BehCtx::KeyEq::operator()(const Key& a, const Key& b) const {
  return equal(a.t, b.t);
}

int BehCtx::intern(std::vector<std::pair<Act, int>> sig) {
  std::sort(sig.begin(), sig.end());
  sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
  auto it = intern_.find(sig);
  if (it != intern_.end()) return it->second;
  int id = static_cast<int>(sigs_.size());
  Meta m;
  for (auto& [a, child] : sig) {
    m.depth = std::max(m.depth, 1 + meta_[child].depth);
    m.init.insert(a);
  }
  if (sig.empty()) {
    m.norm = 0;
  } else {
    m.norm = INT32_MAX;
    for (auto& [a, child] : sig) m.norm = std::min(m.norm, 1 + meta_[child].norm);
  }
  intern_.emplace(sig, id);
  sigs_.push_back(std::move(sig));
  meta_.push_back(std::move(m));
  return id;
}

int BehCtx::id(const TermPtr& p) {
  if (!p->closed) throw OpenTermError("behaviour of an open term");
  if (meta_.empty()) intern({});  // id 0: deadlock
  TermPtr c = canon(p);
  auto it = memo_.find(Key{c});
  if (it != memo_.end()) return it->second;
  std::vector<std::pair<Act, int>> sig;
  for (auto& [a, q] : step_term(rs_, c)) sig.emplace_back(a, id(q));
  int b = intern(std::move(sig));
  memo_.emplace(Key{c}, b);
  return b;
}

const std::vector<std::pair<Act, int>>& BehCtx::moves_of(int beh) const {
  return sigs_[beh];
}

}  // namespace ccsf
