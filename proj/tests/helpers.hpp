#ifndef CCSF_TEST_HELPERS_HPP
#define CCSF_TEST_HELPERS_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ccsf/parser.hpp"
#include "ccsf/ruleset.hpp"
#include "ccsf/term.hpp"

namespace ccsf::testing {

inline TermPtr T(const std::string& s) { return parse_term(s); }

// Representative rule sets for the five witness cases.
inline RuleSet rs_all_left() {
  return make_rule_set({"a", "a'", "tau"}, {}, {"a/a'"});
}
inline RuleSet rs_all_left_mirror() {
  return make_rule_set({}, {"a", "a'", "tau"}, {"a'/a"});
}
inline RuleSet rs_both_sides() {
  return make_rule_set({"a"}, {"a", "a'", "tau"}, {"a/a'"});
}
inline RuleSet rs_opposed_sync() {
  return make_rule_set({"a", "tau"}, {"a'"}, {"a/a'"});
}
inline RuleSet rs_opposed_nosync() {
  return make_rule_set({"a", "tau"}, {"a'"}, {"a'/a"});
}
inline RuleSet rs_tau_opposite() {
  return make_rule_set({"tau"}, {"a", "a'"}, {"a/a'"});
}
inline RuleSet rs_renaming() {
  return make_rule_set({"a", "a'", "tau"}, {"a", "a'", "tau"},
                       {"a/a'", "a'/a"});
}

inline std::vector<RuleSet> representative_rule_sets() {
  return {rs_all_left(), rs_both_sides(), rs_opposed_sync(),
          rs_opposed_nosync(), rs_tau_opposite()};
}

// Random closed term over the full signature, bounded remaining depth.
inline TermPtr random_closed(std::mt19937_64& rng, int fuel) {
  std::uniform_int_distribution<int> pick(0, fuel <= 0 ? 0 : 9);
  std::uniform_int_distribution<int> act(0, 2);
  switch (pick(rng)) {
    case 0:
      return Term::nil();
    case 1:
    case 2:
    case 3:
      return Term::pre(static_cast<Act>(act(rng)), random_closed(rng, fuel - 1));
    case 4:
    case 5:
      return Term::sum(random_closed(rng, fuel - 1),
                       random_closed(rng, fuel - 1));
    case 6:
    case 7:
      return Term::par(random_closed(rng, fuel - 1),
                       random_closed(rng, fuel - 1));
    default:
      return Term::fop(random_closed(rng, fuel - 1),
                       random_closed(rng, fuel - 1));
  }
}

// Random possibly-open term over variables {x, y}, no ||.
inline TermPtr random_open_parfree(std::mt19937_64& rng, int fuel) {
  std::uniform_int_distribution<int> pick(0, fuel <= 0 ? 2 : 9);
  std::uniform_int_distribution<int> act(0, 2);
  switch (pick(rng)) {
    case 0:
      return Term::nil();
    case 1:
      return Term::var("x");
    case 2:
      return Term::var("y");
    case 3:
    case 4:
    case 5:
      return Term::pre(static_cast<Act>(act(rng)),
                       random_open_parfree(rng, fuel - 1));
    case 6:
    case 7:
      return Term::sum(random_open_parfree(rng, fuel - 1),
                       random_open_parfree(rng, fuel - 1));
    default:
      return Term::fop(random_open_parfree(rng, fuel - 1),
                       random_open_parfree(rng, fuel - 1));
  }
}

// Random synchronisation tree of bounded depth.
inline TermPtr random_tree(std::mt19937_64& rng, int depth) {
  if (depth <= 0) return Term::nil();
  std::uniform_int_distribution<int> width(0, 2);
  std::uniform_int_distribution<int> act(0, 2);
  int w = width(rng);
  std::vector<TermPtr> parts;
  for (int i = 0; i < w; ++i)
    parts.push_back(
        Term::pre(static_cast<Act>(act(rng)), random_tree(rng, depth - 1)));
  return sum_of(parts);
}

}  // namespace ccsf::testing

#include "ccsf/eqlogic.hpp"

namespace ccsf::testing {

// Random proof tree, valid by construction: axiom instances at the leaves
// composed with congruence, symmetry and transitivity. leaf_gen supplies
// the substitution images.
inline ProofPtr random_proof(const AxiomSystem& e, std::mt19937_64& rng,
                             int fuel,
                             const std::function<TermPtr()>& leaf_gen) {
  std::uniform_int_distribution<size_t> ax_pick(0, e.axioms.size() - 1);
  std::uniform_int_distribution<int> act(0, 2);
  std::uniform_int_distribution<int> shape(0, fuel <= 0 ? 1 : 8);
  switch (shape(rng)) {
    case 0: {
      size_t i = ax_pick(rng);
      const Axiom& ax = e.axioms[i];
      Subst s;
      for (const auto& v : free_vars(ax.eq.lhs)) s[v] = leaf_gen();
      for (const auto& v : free_vars(ax.eq.rhs))
        if (!s.count(v)) s[v] = leaf_gen();
      return Proof::axiom_inst(e, static_cast<int>(i), s);
    }
    case 1:
      return Proof::refl(leaf_gen());
    case 2:
      return Proof::sym(random_proof(e, rng, fuel - 1, leaf_gen));
    case 3: {
      ProofPtr p = random_proof(e, rng, fuel - 1, leaf_gen);
      return Proof::trans(p, Proof::refl(p->concl.rhs));
    }
    case 4: {
      ProofPtr p = random_proof(e, rng, fuel - 1, leaf_gen);
      return Proof::trans(p, Proof::sym(p));
    }
    case 5:
      return Proof::cong_prefix(static_cast<Act>(act(rng)),
                                random_proof(e, rng, fuel - 1, leaf_gen));
    case 6:
      return Proof::cong_sum(random_proof(e, rng, fuel - 1, leaf_gen),
                             random_proof(e, rng, fuel - 1, leaf_gen));
    case 7:
      return Proof::cong_par(random_proof(e, rng, fuel - 1, leaf_gen),
                             random_proof(e, rng, fuel - 1, leaf_gen));
    default:
      return Proof::cong_f(random_proof(e, rng, fuel - 1, leaf_gen),
                           random_proof(e, rng, fuel - 1, leaf_gen));
  }
}

}  // namespace ccsf::testing

#endif
