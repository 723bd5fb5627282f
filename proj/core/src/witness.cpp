#include "ccsf/witness.hpp"

#include <algorithm>
#include <random>

#include "ccsf/behaviour.hpp"
#include "ccsf/bisim.hpp"
#include "ccsf/prime.hpp"

namespace ccsf {

TermPtr chain(Act mu, int k) {
  TermPtr t = Term::nil();
  for (int i = 0; i < k; ++i) t = Term::pre(mu, t);
  return t;
}

TermPtr ladder(Act mu, int i) {
  std::vector<TermPtr> parts;
  for (int k = 1; k <= i; ++k) parts.push_back(chain(mu, k));
  return sum_of(parts);
}

TermPtr ladder_sum(Act nu, Act mu, int n, int index_origin) {
  std::vector<TermPtr> parts;
  for (int i = index_origin; i <= n; ++i)
    parts.push_back(Term::pre(nu, ladder(mu, i)));
  return sum_of(parts);
}

WitnessFamily witness_terms(const OperatorClass& oc, int n, int index_origin) {
  if (n < 0) throw std::invalid_argument("witness_terms: n must be >= 0");
  if (index_origin != 0 && index_origin != 1)
    throw std::invalid_argument("witness_terms: index origin must be 0 or 1");
  WitnessFamily wf;
  wf.family = oc.family;
  wf.alpha = oc.alpha;
  wf.mirrored = oc.mirrored;
  wf.n = n;
  Act alpha = oc.alpha;
  TermPtr unit_alpha = Term::pre(alpha, Term::nil());
  auto f_of = [&](const TermPtr& small, const TermPtr& big) {
    return oc.mirrored ? Term::fop(big, small) : Term::fop(small, big);
  };
  auto par_of = [&](const TermPtr& small, const TermPtr& big) {
    return oc.mirrored ? Term::par(big, small) : Term::par(small, big);
  };
  switch (oc.family) {
    case Family::AllLeft: {
      TermPtr p = ladder_sum(complement_of(alpha), alpha, n, index_origin);
      wf.witness = f_of(unit_alpha, p);
      std::vector<TermPtr> rhs{Term::pre(alpha, p)};
      for (int i = index_origin; i <= n; ++i)
        rhs.push_back(Term::pre(Act::Tau, ladder(alpha, i)));
      wf.en = {wf.witness, sum_of(rhs)};
      return wf;
    }
    case Family::BothSides: {
      TermPtr q = ladder_sum(alpha, complement_of(alpha), n, index_origin);
      wf.witness = Term::fop(unit_alpha, q);
      std::vector<TermPtr> rhs{Term::pre(alpha, q)};
      for (int i = index_origin; i <= n; ++i)
        rhs.push_back(Term::pre(
            alpha, Term::par(unit_alpha, ladder(complement_of(alpha), i))));
      wf.en = {wf.witness, sum_of(rhs)};
      return wf;
    }
    case Family::OpposedSync:
    case Family::OpposedNoSync: {
      TermPtr p = ladder_sum(complement_of(alpha), alpha, n, index_origin);
      wf.witness = Term::fop(unit_alpha, p);
      std::vector<TermPtr> rhs{Term::pre(alpha, p)};
      for (int i = index_origin; i <= n; ++i)
        rhs.push_back(Term::pre(complement_of(alpha),
                                Term::par(unit_alpha, ladder(alpha, i))));
      if (oc.family == Family::OpposedSync)
        for (int i = index_origin; i <= n; ++i)
          rhs.push_back(Term::pre(Act::Tau, ladder(alpha, i)));
      wf.en = {wf.witness, sum_of(rhs)};
      return wf;
    }
    case Family::TauOpposite: {
      TermPtr q = ladder_sum(alpha, complement_of(alpha), n, index_origin);
      TermPtr unit_tau = Term::pre(Act::Tau, Term::nil());
      wf.witness = f_of(unit_tau, q);
      std::vector<TermPtr> rhs{Term::pre(Act::Tau, q)};
      for (int i = index_origin; i <= n; ++i)
        rhs.push_back(Term::pre(
            alpha, par_of(unit_tau, ladder(complement_of(alpha), i))));
      wf.en = {wf.witness, sum_of(rhs)};
      return wf;
    }
    default:
      throw std::invalid_argument(
          "witness_terms: no witness family for case " +
          family_name(oc.family));
  }
}

bool has_witness_summand(const RuleSet& rs, const TermPtr& p, const TermPtr& w) {
  BehCtx ctx(rs);
  int wb = ctx.id(w);
  for (const TermPtr& s : summands(canon(p)))
    if (ctx.id(s) == wb) return true;
  return false;
}

std::vector<FamilyVerdict> verify_family(const RuleSet& rs,
                                         const OperatorClass& oc, int n_max,
                                         int index_origin) {
  std::vector<FamilyVerdict> out;
  for (int n = 0; n <= n_max; ++n) {
    WitnessFamily wf = witness_terms(oc, n, index_origin);
    FamilyVerdict v;
    v.n = n;
    BisimResult b = bisim(rs, wf.en.lhs, wf.en.rhs);
    v.equation_holds = b.equivalent;
    if (!b.equivalent) v.counterexample = b.witness;
    v.lhs_has_witness_summand = has_witness_summand(rs, wf.en.lhs, wf.witness);
    v.rhs_has_witness_summand = has_witness_summand(rs, wf.en.rhs, wf.witness);
    v.lhs_depth = depth(rs, wf.en.lhs);
    switch (oc.family) {
      case Family::AllLeft:
      case Family::OpposedNoSync: {
        v.extra = "witness is prime";
        SyncTreeEnumerator factors{v.lhs_depth, 3, 4};
        v.extra_holds = is_prime(rs, wf.witness, factors);
        break;
      }
      case Family::BothSides:
      case Family::OpposedSync: {
        v.extra = "witness ~ unit || ladder-sum";
        TermPtr unit = Term::pre(oc.alpha, Term::nil());
        TermPtr big = oc.family == Family::BothSides
                          ? ladder_sum(oc.alpha, complement_of(oc.alpha), n,
                                       index_origin)
                          : ladder_sum(complement_of(oc.alpha), oc.alpha, n,
                                       index_origin);
        v.extra_holds = bisimilar(rs, wf.witness, Term::par(unit, big));
        break;
      }
      case Family::TauOpposite: {
        v.extra = "witness ~ tau || ladder-sum";
        TermPtr unit = Term::pre(Act::Tau, Term::nil());
        TermPtr big =
            ladder_sum(oc.alpha, complement_of(oc.alpha), n, index_origin);
        TermPtr par = oc.mirrored ? Term::par(big, unit) : Term::par(unit, big);
        v.extra_holds = bisimilar(rs, wf.witness, par);
        break;
      }
      default:
        v.extra = "none";
        v.extra_holds = true;
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

TermPtr random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> act_pick(0, 2);
  std::uniform_int_distribution<int> width_pick(0, 2);
  if (depth <= 0) return Term::nil();
  int width = width_pick(rng) + (depth == 1 ? 0 : 1);
  std::vector<TermPtr> parts;
  for (int i = 0; i < width; ++i)
    parts.push_back(Term::pre(static_cast<Act>(act_pick(rng)),
                              random_tree(rng, depth - 1)));
  return sum_of(parts);
}

}  // namespace

namespace {

// No subterm that is a summand or an f-argument may be equivalent to 0;
// the semantic counterpart of nil_clean.
bool sem_nil_clean(BehCtx& ctx, int nil, const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      return true;
    case Op::Prefix:
      return sem_nil_clean(ctx, nil, t->left);
    case Op::Par:
      return sem_nil_clean(ctx, nil, t->left) &&
             sem_nil_clean(ctx, nil, t->right);
    case Op::Sum:
      return ctx.id(t->left) != nil && ctx.id(t->right) != nil &&
             sem_nil_clean(ctx, nil, t->left) &&
             sem_nil_clean(ctx, nil, t->right);
    case Op::F:
      return ctx.id(t->left) != nil && ctx.id(t->right) != nil &&
             sem_nil_clean(ctx, nil, t->left) &&
             sem_nil_clean(ctx, nil, t->right);
  }
  return true;
}

}  // namespace

WnReport wn_preservation_experiment(const RuleSet& rs, const AxiomSystem& e,
                                    int n, long trials, uint64_t seed) {
  // soundness gate
  SyncTreeEnumerator small{2, 2, 3};
  for (const AxiomVerdict& av : sound_axioms(rs, e, small))
    if (av.verdict.refuted)
      throw std::invalid_argument("axiom " + av.name +
                                  " is unsound under the given rule set");
  uint32_t max_size = 0;
  for (const Axiom& ax : e.axioms)
    max_size = std::max({max_size, ax.eq.lhs->size, ax.eq.rhs->size});
  if (n <= static_cast<int>(max_size))
    throw std::invalid_argument(
        "n must exceed the size of every axiom term (max is " +
        std::to_string(max_size) + ")");

  OperatorClass oc = dispatch(rs);
  WitnessFamily wf = witness_terms(oc, n);
  BehCtx ctx(rs);
  int wb = ctx.id(wf.witness);
  int nil = ctx.id(Term::nil());
  auto has_summand = [&](const TermPtr& p) {
    for (const TermPtr& s : summands(canon(p)))
      if (ctx.id(s) == wb) return true;
    return false;
  };

  // The preservation claim is scoped to provable equations between terms
  // that are bisimilar to the witness and carry no 0 summands or factors;
  // instances outside that scope are generated but not asserted.
  const TermPtr big = wf.witness->op == Op::F && !wf.mirrored
                          ? wf.witness->right
                          : wf.witness->left;
  const TermPtr unit = wf.witness->op == Op::F && !wf.mirrored
                           ? wf.witness->left
                           : wf.witness->right;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> act_pick(0, 2);
  auto random_instance = [&]() -> TermPtr {
    std::uniform_int_distribution<int> kind(0, 9);
    switch (kind(rng)) {
      case 0:
      case 1:
      case 2:
      case 3:
        return big;  // the ladder-sum argument of the witness
      case 4:
        return Term::sum(big, big);
      case 5:
      case 6:
        return wf.witness;
      case 7:
        return Term::sum(wf.witness, wf.witness);
      case 8:
        return unit;
      default:
        return random_tree(rng, 2);
    }
  };

  WnReport rep;
  std::uniform_int_distribution<size_t> ax_pick(0, e.axioms.size() - 1);
  std::uniform_int_distribution<int> ctx_pick(0, 4);
  for (long t = 0; t < trials; ++t) {
    ++rep.trials;
    const Axiom& ax = e.axioms[ax_pick(rng)];
    Subst s;
    std::set<std::string> vars = free_vars(ax.eq.lhs);
    for (const auto& v : free_vars(ax.eq.rhs)) vars.insert(v);
    for (const auto& v : vars) s[v] = random_instance();
    TermPtr lhs = apply_subst(s, ax.eq.lhs), rhs = apply_subst(s, ax.eq.rhs);
    std::string context = "none";
    switch (ctx_pick(rng)) {
      case 0:
      case 4: {
        // rebuild the witness shape around an instance of its argument
        TermPtr l = wf.mirrored ? Term::fop(lhs, unit) : Term::fop(unit, lhs);
        TermPtr r = wf.mirrored ? Term::fop(rhs, unit) : Term::fop(unit, rhs);
        lhs = l;
        rhs = r;
        context = "f-around";
        break;
      }
      case 1: {
        lhs = Term::sum(lhs, wf.witness);
        rhs = Term::sum(rhs, wf.witness);
        context = "sum-with-witness";
        break;
      }
      case 2: {
        TermPtr r = random_tree(rng, 2);
        lhs = Term::sum(lhs, r);
        rhs = Term::sum(rhs, r);
        context = "sum";
        break;
      }
      default:
        break;
    }
    if (ctx.id(lhs) != wb || ctx.id(rhs) != wb) continue;
    if (!sem_nil_clean(ctx, nil, lhs) || !sem_nil_clean(ctx, nil, rhs))
      continue;
    ++rep.checked;
    if (has_summand(lhs) != has_summand(rhs)) {
      ++rep.violations;
      std::string detail = "axiom " + ax.name + " with";
      for (auto& [k, v] : s) detail += " " + k + " := " + to_string(v) + ";";
      detail += " context " + context;
      rep.details.push_back(detail);
    }
  }
  return rep;
}

}  // namespace ccsf
