#include "ccsf/lts.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

namespace ccsf {

namespace {

void dedup(std::vector<std::pair<Act, TermPtr>>& moves) {
  std::sort(moves.begin(), moves.end(),
            [](const auto& x, const auto& y) {
              if (x.first != y.first) return x.first < y.first;
              return cmp(x.second, y.second) < 0;
            });
  moves.erase(std::unique(moves.begin(), moves.end(),
                          [](const auto& x, const auto& y) {
                            return x.first == y.first &&
                                   equal(x.second, y.second);
                          }),
              moves.end());
}

}  // namespace

std::vector<std::pair<Act, TermPtr>> step_term(const RuleSet& rs,
                                               const TermPtr& t) {
  std::vector<std::pair<Act, TermPtr>> out;
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      break;
    case Op::Prefix:
      out.emplace_back(t->act, canon(t->left));
      break;
    case Op::Sum: {
      for (auto& m : step_term(rs, t->left)) out.push_back(m);
      for (auto& m : step_term(rs, t->right)) out.push_back(m);
      break;
    }
    case Op::Par: {
      auto ls = step_term(rs, t->left);
      auto rr = step_term(rs, t->right);
      TermPtr cl = canon(t->left), cr = canon(t->right);
      for (auto& [a, l2] : ls) out.emplace_back(a, Term::par(l2, cr));
      for (auto& [a, r2] : rr) out.emplace_back(a, Term::par(cl, r2));
      for (auto& [a, l2] : ls) {
        if (!visible(a)) continue;
        for (auto& [b, r2] : rr)
          if (b == complement_of(a)) out.emplace_back(Act::Tau, Term::par(l2, r2));
      }
      break;
    }
    case Op::F: {
      auto ls = step_term(rs, t->left);
      auto rr = step_term(rs, t->right);
      TermPtr cl = canon(t->left), cr = canon(t->right);
      for (auto& [a, l2] : ls)
        if (rs.has_left(a)) out.emplace_back(a, Term::par(l2, cr));
      for (auto& [a, r2] : rr)
        if (rs.has_right(a)) out.emplace_back(a, Term::par(cl, r2));
      auto sync = [&](Act first) {
        for (auto& [a, l2] : ls) {
          if (a != first) continue;
          for (auto& [b, r2] : rr)
            if (b == complement_of(first))
              out.emplace_back(Act::Tau, Term::par(l2, r2));
        }
      };
      if (rs.sync_a) sync(Act::A);
      if (rs.sync_b) sync(Act::ABar);
      break;
    }
  }
  dedup(out);
  return out;
}

std::vector<std::pair<Act, TermPtr>> step(const RuleSet& rs, const TermPtr& p) {
  if (!p->closed) throw OpenTermError("step: term is open");
  return step_term(rs, p);
}

std::vector<std::vector<std::pair<Act, uint32_t>>> Lts::out() const {
  std::vector<std::vector<std::pair<Act, uint32_t>>> adj(states.size());
  for (auto& [s, a, d] : transitions) adj[s].emplace_back(a, d);
  return adj;
}

Lts build_lts(const RuleSet& rs, const TermPtr& p, size_t state_cap) {
  if (!p->closed) throw OpenTermError("build_lts: term is open");
  struct Hash {
    size_t operator()(const TermPtr& t) const { return t->hash; }
  };
  struct Eq {
    bool operator()(const TermPtr& a, const TermPtr& b) const {
      return equal(a, b);
    }
  };
  Lts lts;
  std::unordered_map<TermPtr, uint32_t, Hash, Eq> index;
  std::deque<uint32_t> work;
  auto add = [&](const TermPtr& t) {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    if (lts.states.size() >= state_cap)
      throw StateCapError("state cap of " + std::to_string(state_cap) +
                          " states exceeded");
    uint32_t id = static_cast<uint32_t>(lts.states.size());
    lts.states.push_back(t);
    index.emplace(t, id);
    work.push_back(id);
    return id;
  };
  lts.root = add(canon(p));
  while (!work.empty()) {
    uint32_t id = work.front();
    work.pop_front();
    for (auto& [a, q] : step_term(rs, lts.states[id]))
      lts.transitions.emplace_back(id, a, add(q));
  }
  return lts;
}

namespace {

// Transitions strictly decrease depth, so the graph is acyclic and plain
// memoised recursion terminates.
int depth_of(const Lts& lts, const std::vector<std::vector<std::pair<Act, uint32_t>>>& adj,
             std::vector<int>& memo, uint32_t s) {
  if (memo[s] >= 0) return memo[s];
  int d = 0;
  for (auto& [a, t] : adj[s]) d = std::max(d, 1 + depth_of(lts, adj, memo, t));
  return memo[s] = d;
}

int norm_of(const Lts& lts, const std::vector<std::vector<std::pair<Act, uint32_t>>>& adj,
            std::vector<int>& memo, uint32_t s) {
  if (memo[s] >= 0) return memo[s];
  if (adj[s].empty()) return memo[s] = 0;
  int n = INT32_MAX;
  for (auto& [a, t] : adj[s]) n = std::min(n, 1 + norm_of(lts, adj, memo, t));
  return memo[s] = n;
}

}  // namespace

int depth(const RuleSet& rs, const TermPtr& p) {
  Lts lts = build_lts(rs, p);
  auto adj = lts.out();
  std::vector<int> memo(lts.states.size(), -1);
  return depth_of(lts, adj, memo, lts.root);
}

int norm(const RuleSet& rs, const TermPtr& p) {
  Lts lts = build_lts(rs, p);
  auto adj = lts.out();
  std::vector<int> memo(lts.states.size(), -1);
  return norm_of(lts, adj, memo, lts.root);
}

std::set<Act> initials(const RuleSet& rs, const TermPtr& p) {
  std::set<Act> out;
  for (auto& [a, q] : step(rs, p)) out.insert(a);
  return out;
}

std::set<std::vector<Act>> traces(const RuleSet& rs, const TermPtr& p) {
  Lts lts = build_lts(rs, p);
  auto adj = lts.out();
  std::set<std::vector<Act>> out;
  std::vector<Act> cur;
  std::function<void(uint32_t)> walk = [&](uint32_t s) {
    out.insert(cur);
    for (auto& [a, t] : adj[s]) {
      cur.push_back(a);
      walk(t);
      cur.pop_back();
    }
  };
  walk(lts.root);
  return out;
}

TermPtr expand_par(const RuleSet& rs, const TermPtr& p) {
  std::vector<TermPtr> parts;
  for (auto& [a, q] : step(rs, p)) parts.push_back(Term::pre(a, q));
  return canon(sum_of(parts));
}

}  // namespace ccsf
