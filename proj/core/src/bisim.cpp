#include "ccsf/bisim.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

namespace ccsf {

namespace {

struct Joint {
  Lts lts;          // union graph; root = p, extra root for q
  uint32_t root_q;  // index of q's state
};

// One reachable graph over both roots so a single partition covers them.
Joint joint_lts(const RuleSet& rs, const TermPtr& p, const TermPtr& q,
                size_t state_cap) {
  struct Hash {
    size_t operator()(const TermPtr& t) const { return t->hash; }
  };
  struct Eq {
    bool operator()(const TermPtr& a, const TermPtr& b) const {
      return equal(a, b);
    }
  };
  Joint j;
  std::unordered_map<TermPtr, uint32_t, Hash, Eq> index;
  std::deque<uint32_t> work;
  auto add = [&](const TermPtr& t) {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    if (j.lts.states.size() >= state_cap)
      throw StateCapError("state cap of " + std::to_string(state_cap) +
                          " states exceeded");
    uint32_t id = static_cast<uint32_t>(j.lts.states.size());
    j.lts.states.push_back(t);
    index.emplace(t, id);
    work.push_back(id);
    return id;
  };
  j.lts.root = add(canon(p));
  j.root_q = add(canon(q));
  while (!work.empty()) {
    uint32_t id = work.front();
    work.pop_front();
    for (auto& [a, t] : step_term(rs, j.lts.states[id]))
      j.lts.transitions.emplace_back(id, a, add(t));
  }
  return j;
}

// Kanellakis-Smolka style refinement: split blocks by the set of
// (action, target block) pairs until stable.
std::vector<int> refine(const Lts& lts) {
  auto adj = lts.out();
  size_t n = lts.states.size();
  std::vector<int> block(n, 0);
  size_t blocks = 1;
  while (true) {
    std::map<std::pair<int, std::vector<std::pair<Act, int>>>, int> next_ids;
    std::vector<int> next(n);
    for (size_t s = 0; s < n; ++s) {
      std::vector<std::pair<Act, int>> sig;
      sig.reserve(adj[s].size());
      for (auto& [a, t] : adj[s]) sig.emplace_back(a, block[t]);
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      auto key = std::make_pair(block[s], std::move(sig));
      auto it = next_ids.find(key);
      if (it == next_ids.end())
        it = next_ids.emplace(std::move(key), static_cast<int>(next_ids.size()))
                 .first;
      next[s] = it->second;
    }
    if (next_ids.size() == blocks) return next;
    blocks = next_ids.size();
    block = std::move(next);
  }
}

// Builds a shortest alternating move/obligation trace for two states known
// to be in different blocks of the stable partition.
void distinguish(const Lts& lts,
                 const std::vector<std::vector<std::pair<Act, uint32_t>>>& adj,
                 const std::vector<int>& block, uint32_t p, uint32_t q,
                 int depth_left, std::vector<std::string>& out) {
  if (depth_left <= 0) return;
  auto blocks_after = [&](uint32_t s, Act a) {
    std::vector<int> bs;
    for (auto& [x, t] : adj[s])
      if (x == a) bs.push_back(block[t]);
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    return bs;
  };
  for (int side = 0; side < 2; ++side) {
    uint32_t from = side == 0 ? p : q;
    uint32_t other = side == 0 ? q : p;
    for (auto& [a, t] : adj[from]) {
      auto reach = blocks_after(other, a);
      if (!std::binary_search(reach.begin(), reach.end(), block[t])) {
        out.push_back((side == 0 ? "left" : "right") + std::string(" does ") +
                      act_name(a) + " to " + to_string(lts.states[t]) +
                      ", which the other side cannot match");
        // deepen the explanation against the best mismatching reply
        uint32_t best = UINT32_MAX;
        for (auto& [x, u] : adj[other])
          if (x == a) best = u;
        if (best != UINT32_MAX && block[best] != block[t])
          distinguish(lts, adj, block, side == 0 ? t : best,
                      side == 0 ? best : t, depth_left - 1, out);
        return;
      }
    }
  }
}

}  // namespace

BisimResult bisim(const RuleSet& rs, const TermPtr& p, const TermPtr& q,
                  size_t state_cap) {
  if (!p->closed || !q->closed) throw OpenTermError("bisim: open term");
  Joint j = joint_lts(rs, p, q, state_cap);
  std::vector<int> block = refine(j.lts);
  BisimResult res;
  res.equivalent = block[j.lts.root] == block[j.root_q];
  if (res.equivalent) {
    std::map<int, std::vector<std::string>> by_block;
    for (size_t s = 0; s < j.lts.states.size(); ++s)
      by_block[block[s]].push_back(to_string(j.lts.states[s]));
    for (auto& [b, names] : by_block) res.partition.push_back(std::move(names));
  } else {
    auto adj = j.lts.out();
    distinguish(j.lts, adj, block, j.lts.root, j.root_q, 64, res.witness);
  }
  return res;
}

bool bisimilar(const RuleSet& rs, const TermPtr& p, const TermPtr& q) {
  return bisim(rs, p, q).equivalent;
}

std::vector<std::vector<bool>> naive_bisim_relation(const Lts& lts) {
  auto adj = lts.out();
  size_t n = lts.states.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, true));
  bool changed = true;
  auto matched = [&](uint32_t s, uint32_t t) {
    for (auto& [a, s2] : adj[s]) {
      bool ok = false;
      for (auto& [b, t2] : adj[t])
        if (a == b && rel[s2][t2]) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  };
  while (changed) {
    changed = false;
    for (size_t s = 0; s < n; ++s)
      for (size_t t = 0; t < n; ++t) {
        if (!rel[s][t]) continue;
        if (!matched(static_cast<uint32_t>(s), static_cast<uint32_t>(t)) ||
            !matched(static_cast<uint32_t>(t), static_cast<uint32_t>(s))) {
          rel[s][t] = false;
          changed = true;
        }
      }
  }
  return rel;
}

}  // namespace ccsf
