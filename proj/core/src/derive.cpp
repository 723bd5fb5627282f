#include "ccsf/derive.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

#include "ccsf/transform.hpp"

namespace ccsf {

namespace {

TermPtr dedup_canon_sum(const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      return t;
    case Op::Prefix:
      return Term::pre(t->act, dedup_canon_sum(t->left));
    case Op::Par:
      return Term::par(dedup_canon_sum(t->left), dedup_canon_sum(t->right));
    case Op::F:
      return Term::fop(dedup_canon_sum(t->left), dedup_canon_sum(t->right));
    case Op::Sum: {
      std::vector<TermPtr> parts = summands(t);
      for (auto& p : parts) p = dedup_canon_sum(p);
      std::sort(parts.begin(), parts.end(),
                [](const TermPtr& a, const TermPtr& b) { return cmp(a, b) < 0; });
      parts.erase(std::unique(parts.begin(), parts.end(),
                              [](const TermPtr& a, const TermPtr& b) {
                                return equal(a, b);
                              }),
                  parts.end());
      return sum_of(parts);
    }
  }
  return t;
}

struct Match {
  Subst subst;
  std::vector<TermPtr> remainder;  // unmatched summands at a sum redex
};

// Structural matching of an axiom side against a term. At sum nodes the
// pattern summands are assigned to the subject summands: non-variable
// patterns to single summands, variables to non-empty sub-multisets. Under
// idempotence (aci) assignments may overlap and leftovers stay; otherwise
// consumption is disjoint. Top-level calls may leave a remainder. All
// assignment choices are enumerated, up to the given limit.
struct Matcher {
  bool aci = false;

  void match_all(const TermPtr& pat, const TermPtr& sub, const Subst& seed,
                 std::vector<Subst>& out, size_t limit) {
    if (out.size() >= limit) return;
    if (pat->op == Op::Var) {
      auto it = seed.find(pat->name);
      if (it != seed.end()) {
        if (ac_equal(it->second, sub)) out.push_back(seed);
      } else {
        Subst s = seed;
        s[pat->name] = sub;
        out.push_back(std::move(s));
      }
      return;
    }
    if (pat->op == Op::Sum || sub->op == Op::Sum) {
      std::vector<Match> ms;
      match_sum(summands(pat), summands(sub), seed, false, ms, limit);
      for (Match& m : ms) out.push_back(std::move(m.subst));
      return;
    }
    if (pat->op != sub->op) return;
    switch (pat->op) {
      case Op::Nil:
        out.push_back(seed);
        return;
      case Op::Prefix:
        if (pat->act == sub->act)
          match_all(pat->left, sub->left, seed, out, limit);
        return;
      case Op::Par:
      case Op::F: {
        std::vector<Subst> lefts;
        match_all(pat->left, sub->left, seed, lefts, limit);
        for (const Subst& s1 : lefts)
          match_all(pat->right, sub->right, s1, out, limit);
        return;
      }
      default:
        return;
    }
  }

  // All ways to match the pattern summands against the subject summands.
  // allow_remainder: unassigned subject summands survive as the rest of
  // the sum. limit caps the number of matches collected.
  void match_sum(const std::vector<TermPtr>& pats, std::vector<TermPtr> subs,
                 const Subst& seed, bool allow_remainder,
                 std::vector<Match>& out, size_t limit) {
    // order: non-variable patterns first, then variables
    std::vector<TermPtr> fixed, vars;
    for (const auto& p : pats)
      (p->op == Op::Var ? vars : fixed).push_back(p);
    std::vector<bool> used(subs.size(), false);
    Subst s = seed;
    std::function<void(size_t)> assign_vars = [&](size_t vi) {
      if (out.size() >= limit) return;
      if (vi == vars.size()) {
        std::vector<TermPtr> leftovers;
        if (aci) {
          // leftovers = subject summands not covered by the instance
          std::vector<TermPtr> inst;
          for (const auto& p : pats)
            for (const auto& q : summands(apply_subst(s, p))) inst.push_back(q);
          for (const auto& q : subs) {
            bool covered = false;
            for (const auto& r : inst)
              if (ac_equal(q, r)) {
                covered = true;
                break;
              }
            if (!covered) leftovers.push_back(q);
          }
        } else {
          for (size_t i = 0; i < subs.size(); ++i)
            if (!used[i]) leftovers.push_back(subs[i]);
        }
        if (!allow_remainder && !leftovers.empty()) return;
        Match m;
        m.subst = s;
        if (allow_remainder) m.remainder = std::move(leftovers);
        out.push_back(std::move(m));
        return;
      }
      const TermPtr& v = vars[vi];
      auto bound = s.find(v->name);
      if (bound != s.end()) {
        // image must be absorbed by the available summands
        std::vector<TermPtr> need = summands(bound->second);
        std::vector<bool> saved = used;
        bool ok = true;
        for (const auto& n : need) {
          bool found = false;
          for (size_t i = 0; i < subs.size(); ++i) {
            if (!aci && used[i]) continue;
            if (ac_equal(subs[i], n)) {
              used[i] = true;
              found = true;
              break;
            }
          }
          if (!found) {
            ok = false;
            break;
          }
        }
        if (ok) assign_vars(vi + 1);
        used = saved;
        return;
      }
      // choose a non-empty subset of the available summands
      std::vector<size_t> avail;
      for (size_t i = 0; i < subs.size(); ++i)
        if (aci || !used[i]) avail.push_back(i);
      size_t combos = size_t{1} << avail.size();
      for (size_t mask = 1; mask < combos && out.size() < limit; ++mask) {
        std::vector<TermPtr> picked;
        std::vector<bool> saved = used;
        for (size_t b = 0; b < avail.size(); ++b)
          if (mask & (size_t{1} << b)) {
            picked.push_back(subs[avail[b]]);
            used[avail[b]] = true;
          }
        std::sort(picked.begin(), picked.end(),
                  [](const TermPtr& a, const TermPtr& b) { return cmp(a, b) < 0; });
        s[v->name] = sum_of(picked);
        assign_vars(vi + 1);
        s.erase(v->name);
        used = saved;
      }
    };
    std::function<void(size_t)> assign_fixed = [&](size_t fi) {
      if (out.size() >= limit) return;
      if (fi == fixed.size()) {
        assign_vars(0);
        return;
      }
      for (size_t i = 0; i < subs.size(); ++i) {
        if (!aci && used[i]) continue;
        std::vector<Subst> cands;
        match_all(fixed[fi], subs[i], s, cands, limit);
        Subst saved = std::move(s);
        bool was = used[i];
        used[i] = true;
        for (Subst& c : cands) {
          s = std::move(c);
          assign_fixed(fi + 1);
        }
        s = std::move(saved);
        used[i] = was;
      }
    };
    assign_fixed(0);
  }
};

struct EdgeRec {
  int axiom = -1;
  std::vector<int> path;  // child indices from the root to the redex
  TermPtr from_concrete;  // term with the instantiated axiom lhs in place
  TermPtr to_concrete;
  Subst subst;
  std::vector<TermPtr> remainder;
};

struct Node {
  TermPtr term;
  int dist = 0;
  int parent = -1;  // node index
  EdgeRec via;      // edge from parent to this node
};

struct Engine {
  const AxiomSystem& e;
  DeriveLimits limits;
  bool aci = false;    // quotient by idempotence of +
  bool strip = false;  // restrict to nil-clean terms
  std::vector<int> active;  // axiom indices that can change a term
  Matcher matcher;

  TermPtr normal(const TermPtr& t) const {
    return aci ? dedup_canon_sum(canon(t)) : canon(t);
  }

  bool admissible(const TermPtr& t) const {
    if (static_cast<int>(t->size) > limits.max_term_size) return false;
    if (strip && !nil_clean(t)) return false;
    return true;
  }

  // Enumerate one-step rewrites of state.
  void rewrites(const TermPtr& state, const std::function<void(EdgeRec)>& sink) {
    std::vector<int> path;
    std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
      for (int ai : active) try_axiom(state, u, path, ai, sink);
      switch (u->op) {
        case Op::Prefix:
          path.push_back(0);
          walk(u->left);
          path.pop_back();
          break;
        case Op::Par:
        case Op::F:
          path.push_back(0);
          walk(u->left);
          path.pop_back();
          path.push_back(1);
          walk(u->right);
          path.pop_back();
          break;
        case Op::Sum: {
          // descend into individual summands; sub-multisets of the sum
          // are covered by remainder matching at the sum node itself
          std::vector<TermPtr> parts = summands(u);
          for (size_t i = 0; i < parts.size(); ++i) {
            path.push_back(static_cast<int>(i + 2));  // summand index tag
            walk(parts[i]);
            path.pop_back();
          }
          break;
        }
        default:
          break;
      }
    };
    walk(state);
  }

  void try_axiom(const TermPtr& state, const TermPtr& redex,
                 const std::vector<int>& path, int ai,
                 const std::function<void(EdgeRec)>& sink) {
    const Equation& ax = e.axioms[ai].eq;
    std::vector<Match> matches;
    if (ax.lhs->op == Op::Sum || redex->op == Op::Sum) {
      matcher.match_sum(summands(ax.lhs), summands(redex), {}, true, matches,
                        64);
    } else {
      std::vector<Subst> subs;
      matcher.match_all(ax.lhs, redex, {}, subs, 64);
      for (Subst& s : subs) matches.push_back({std::move(s), {}});
    }
    for (auto& m : matches) {
      // instantiate unbound right-hand variables with 0
      Subst s = m.subst;
      for (const auto& v : free_vars(ax.rhs))
        if (!s.count(v)) s[v] = Term::nil();
      TermPtr inst_l = apply_subst(s, ax.lhs), inst_r = apply_subst(s, ax.rhs);
      if (ac_equal(inst_l, inst_r)) continue;
      TermPtr local_from = inst_l, local_to = inst_r;
      if (!m.remainder.empty()) {
        local_from = Term::sum(inst_l, sum_of(m.remainder));
        local_to = Term::sum(inst_r, sum_of(m.remainder));
      }
      EdgeRec rec;
      rec.axiom = ai;
      rec.path = path;
      rec.subst = s;
      rec.remainder = m.remainder;
      rec.from_concrete = replace_at(state, path, local_from);
      rec.to_concrete = replace_at(state, path, local_to);
      if (!admissible(rec.from_concrete) || !admissible(rec.to_concrete))
        continue;
      sink(std::move(rec));
    }
  }

  static TermPtr replace_at(const TermPtr& t, const std::vector<int>& path,
                            const TermPtr& repl, size_t at = 0) {
    if (at == path.size()) return repl;
    int step = path[at];
    if (t->op == Op::Sum) {
      std::vector<TermPtr> parts = summands(t);
      size_t idx = static_cast<size_t>(step - 2);
      parts[idx] = replace_at(parts[idx], path, repl, at + 1);
      return sum_of(parts);
    }
    switch (t->op) {
      case Op::Prefix:
        return Term::pre(t->act, replace_at(t->left, path, repl, at + 1));
      case Op::Par:
        return step == 0
                   ? Term::par(replace_at(t->left, path, repl, at + 1), t->right)
                   : Term::par(t->left, replace_at(t->right, path, repl, at + 1));
      case Op::F:
        return step == 0
                   ? Term::fop(replace_at(t->left, path, repl, at + 1), t->right)
                   : Term::fop(t->left, replace_at(t->right, path, repl, at + 1));
      default:
        throw std::logic_error("replace_at: bad path");
    }
  }

  // Congruence-wrapped axiom instance at the recorded position. The wrap
  // follows the structure of the source state, which both concretes share
  // everywhere outside the redex; the conclusion therefore reproduces
  // from_concrete and to_concrete exactly even when the rewrite changed
  // the arity of a sum.
  ProofPtr edge_core(const TermPtr& state, const EdgeRec& rec) const {
    std::function<ProofPtr(const TermPtr&, size_t)> wrap =
        [&](const TermPtr& node, size_t at) -> ProofPtr {
      if (at == rec.path.size()) {
        ProofPtr axp = Proof::axiom_inst(e, rec.axiom, rec.subst);
        if (!rec.remainder.empty())
          axp = Proof::cong_sum(axp, Proof::refl(sum_of(rec.remainder)));
        return axp;
      }
      int step = rec.path[at];
      if (node->op == Op::Sum) {
        std::vector<TermPtr> parts = summands(node);
        size_t idx = static_cast<size_t>(step - 2);
        ProofPtr inner = wrap(parts[idx], at + 1);
        ProofPtr acc = nullptr;
        for (size_t i = parts.size(); i-- > 0;) {
          ProofPtr piece = (i == idx) ? inner : Proof::refl(parts[i]);
          acc = acc ? Proof::cong_sum(piece, acc) : piece;
        }
        return acc;
      }
      switch (node->op) {
        case Op::Prefix:
          return Proof::cong_prefix(node->act, wrap(node->left, at + 1));
        case Op::Par:
          return step == 0 ? Proof::cong_par(wrap(node->left, at + 1),
                                             Proof::refl(node->right))
                           : Proof::cong_par(Proof::refl(node->left),
                                             wrap(node->right, at + 1));
        case Op::F:
          return step == 0 ? Proof::cong_f(wrap(node->left, at + 1),
                                           Proof::refl(node->right))
                           : Proof::cong_f(Proof::refl(node->left),
                                           wrap(node->right, at + 1));
        default:
          throw std::logic_error("edge_core: bad path");
      }
    };
    return wrap(state, 0);
  }

  // Proof of state_from ~ state_to along one recorded edge, where the edge
  // was recorded as from_concrete -> to_concrete with matching normal forms.
  ProofPtr edge_proof(const TermPtr& state_from, const TermPtr& state_to,
                      const EdgeRec& rec) const {
    ProofPtr p = edge_core(state_from, rec);
    if (!ac_equal(state_from, rec.from_concrete))
      p = Proof::trans(dedup_proof(e, state_from, rec.from_concrete), p);
    if (!ac_equal(rec.to_concrete, state_to))
      p = Proof::trans(p, dedup_proof(e, rec.to_concrete, state_to));
    return p;
  }
};

}  // namespace

DeriveResult bounded_derivable(const AxiomSystem& e, const Equation& goal,
                               const DeriveLimits& limits) {
  if (!goal.lhs->closed || !goal.rhs->closed)
    throw std::invalid_argument("bounded_derivable: goal must be closed");
  if (!symmetry_closed(e))
    throw std::invalid_argument("bounded_derivable: axiom system not closed "
                                "under symmetry");

  Engine eng{e, limits};
  AxiomSystem std_ax = standard_axioms();
  // The nil-clean quotient is complete only for saturated systems with the
  // standard axioms; otherwise fall back to the unrestricted search.
  eng.strip = has_standard_axioms(e) && is_saturated(e);
  eng.aci = e.find(std_ax.axioms[0].eq) >= 0;  // A1 present
  eng.matcher.aci = eng.aci;
  for (size_t i = 0; i < e.axioms.size(); ++i) {
    const Equation& ax = e.axioms[i].eq;
    TermPtr l = eng.normal(ax.lhs), r = eng.normal(ax.rhs);
    if (equal(l, r)) continue;  // identity modulo the structural theory
    if (eng.strip && (!nil_clean(ax.lhs) || !nil_clean(ax.rhs)))
      continue;  // cannot occur in a nil-clean proof
    eng.active.push_back(static_cast<int>(i));
  }

  DeriveResult res;
  res.verdict = DeriveVerdict::Exhausted;

  // Goal endpoints; proofs of endpoint ~ start-state get glued at the end.
  TermPtr l0 = goal.lhs, r0 = goal.rhs;
  ProofPtr glue_l = nullptr, glue_r = nullptr;  // goal side ~ search start
  if (eng.strip) {
    glue_l = strip_nil_proof(e, l0);
    glue_r = strip_nil_proof(e, r0);
    l0 = strip_nil(l0);
    r0 = strip_nil(r0);
  }
  TermPtr start_l = eng.normal(l0), start_r = eng.normal(r0);

  if (static_cast<int>(start_l->size) > limits.max_term_size ||
      static_cast<int>(start_r->size) > limits.max_term_size) {
    res.note = "a goal side exceeds the term-size limit, so no proof within "
               "the limits contains it";
    return res;
  }

  auto finish = [&](ProofPtr chain) {
    // chain: start_l ~ start_r; add the strip/normalisation glue
    ProofPtr p = chain;
    if (!ac_equal(goal.lhs, start_l)) {
      ProofPtr pre = glue_l ? glue_l : nullptr;  // goal.lhs ~ l0
      ProofPtr norm_l = ac_equal(l0, start_l) ? nullptr
                                              : dedup_proof(e, l0, start_l);
      ProofPtr left = pre;
      if (norm_l) left = left ? Proof::trans(left, norm_l) : norm_l;
      if (left) p = Proof::trans(left, p);
    }
    if (!ac_equal(goal.rhs, start_r)) {
      ProofPtr pre = glue_r ? glue_r : nullptr;  // goal.rhs ~ r0
      ProofPtr norm_r = ac_equal(r0, start_r) ? nullptr
                                              : dedup_proof(e, r0, start_r);
      ProofPtr right = pre;
      if (norm_r) right = right ? Proof::trans(right, norm_r) : norm_r;
      if (right) p = Proof::trans(p, Proof::sym(right));
    }
    res.verdict = DeriveVerdict::Derivable;
    res.proof = p;
  };

  if (ac_equal(start_l, start_r)) {
    finish(Proof::refl(start_l));
    return res;
  }

  // Bidirectional breadth-first search over normal forms.
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> index;  // key -> node
  std::vector<char> side_of;                   // 0 = from lhs, 1 = from rhs
  auto key_of = [](const TermPtr& t) { return to_string(t); };
  auto add_root = [&](const TermPtr& t, char side) {
    nodes.push_back({t, 0, -1, {}});
    side_of.push_back(side);
    index[key_of(t)] = static_cast<int>(nodes.size()) - 1;
  };
  add_root(start_l, 0);
  add_root(start_r, 1);

  std::deque<int> frontier[2];
  frontier[0].push_back(0);
  frontier[1].push_back(1);
  int radius[2] = {0, 0};
  bool closed[2] = {false, false};
  int meet_a = -1, meet_b = -1;  // node on side 0, node on side 1

  auto expand_side = [&](int side) {
    std::deque<int> next;
    while (!frontier[side].empty() && meet_a < 0 &&
           res.verdict != DeriveVerdict::Capped) {
      int ni = frontier[side].front();
      frontier[side].pop_front();
      TermPtr state = nodes[ni].term;
      eng.rewrites(state, [&](EdgeRec rec) {
        if (meet_a >= 0 || res.verdict == DeriveVerdict::Capped) return;
        TermPtr to = eng.normal(rec.to_concrete);
        if (static_cast<int>(to->size) > limits.max_term_size) return;
        std::string key = key_of(to);
        auto it = index.find(key);
        if (it == index.end()) {
          if (nodes.size() >= limits.node_budget) {
            res.verdict = DeriveVerdict::Capped;
            return;
          }
          nodes.push_back({to, nodes[ni].dist + 1, ni, rec});
          side_of.push_back(static_cast<char>(side));
          index.emplace(std::move(key), static_cast<int>(nodes.size()) - 1);
          next.push_back(static_cast<int>(nodes.size()) - 1);
        } else if (side_of[it->second] != side) {
          // meeting point: keep the crossing edge as a node on our side
          nodes.push_back({to, nodes[ni].dist + 1, ni, rec});
          side_of.push_back(static_cast<char>(side));
          int mine = static_cast<int>(nodes.size()) - 1;
          meet_a = side == 0 ? mine : it->second;
          meet_b = side == 0 ? it->second : mine;
        }
      });
    }
    if (res.verdict == DeriveVerdict::Capped) return;
    frontier[side] = std::move(next);
    ++radius[side];
    if (frontier[side].empty()) closed[side] = true;
  };

  // If either component is fully explored without meeting the other side,
  // no chain exists within the size cap at any depth: had the components
  // touched, the other side's root would already have been hit.
  while (meet_a < 0 && res.verdict != DeriveVerdict::Capped) {
    if (closed[0] || closed[1]) break;
    if (radius[0] + radius[1] >= limits.max_steps) break;
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    expand_side(side);
  }

  res.explored = static_cast<long>(nodes.size());
  if (res.verdict == DeriveVerdict::Capped) {
    res.note = "node budget exceeded before the bounded space was exhausted";
    return res;
  }
  if (meet_a < 0) {
    res.verdict = DeriveVerdict::Exhausted;
    if (closed[0] || closed[1])
      res.note = "rewriting closure exhausted with no derivation";
    else
      res.note = "no derivation within " + std::to_string(limits.max_steps) +
                 " axiom steps";
    return res;
  }

  // Assemble: start_l ~ ... ~ meeting term (side 0), then reverse of the
  // side-1 chain down to start_r.
  auto chain_to_root = [&](int node) {
    std::vector<int> path;
    for (int n = node; n >= 0; n = nodes[n].parent) path.push_back(n);
    std::reverse(path.begin(), path.end());
    return path;
  };
  ProofPtr pr = nullptr;
  std::vector<int> left_path = chain_to_root(meet_a);
  for (size_t i = 1; i < left_path.size(); ++i) {
    ProofPtr step = eng.edge_proof(nodes[left_path[i - 1]].term,
                                   nodes[left_path[i]].term,
                                   nodes[left_path[i]].via);
    pr = pr ? Proof::trans(pr, step) : step;
  }
  std::vector<int> right_path = chain_to_root(meet_b);
  for (size_t i = right_path.size(); i-- > 1;) {
    // edge goes parent -> child while searching from rhs; flip it
    ProofPtr step = Proof::sym(eng.edge_proof(nodes[right_path[i - 1]].term,
                                              nodes[right_path[i]].term,
                                              nodes[right_path[i]].via));
    pr = pr ? Proof::trans(pr, step) : step;
  }
  if (!pr) pr = Proof::refl(start_l);
  finish(pr);
  return res;
}

}  // namespace ccsf
