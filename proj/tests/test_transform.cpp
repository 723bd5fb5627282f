#include <random>

#include "ccsf/behaviour.hpp"
#include "ccsf/bisim.hpp"
#include "ccsf/opspace.hpp"
#include "ccsf/transform.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ccsf;
using namespace ccsf::testing;

TEST_CASE("par_to_f rewrites || into the two-sided f sum") {
  CHECK(ac_equal(par_to_f(T("a.0 || a'.0")),
                 T("f(a.0, a'.0) + f(a'.0, a.0)")));
  TermPtr fixed = T("f(x, y)");
  CHECK(equal(par_to_f(fixed), fixed));
  CHECK(ac_equal(par_to_f(T("a.(x || 0)")), T("a.(f(x, 0) + f(0, x))")));
}

TEST_CASE("par_to_f eliminates || everywhere") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    TermPtr t = random_closed(rng, 4);
    CHECK(!contains_par(par_to_f(t)));
    if (!contains_par(t)) CHECK(equal(par_to_f(t), t));
  }
}

TEST_CASE("strip_nil removes 0 summands and factors") {
  CHECK(equal(strip_nil(T("a.0 + 0")), T("a.0")));
  CHECK(strip_nil(T("f(0, x)"))->op == Op::Nil);
  CHECK(equal(strip_nil(T("f(x, 0 + 0)")), T("x")));
  CHECK_THROWS_AS(strip_nil(T("a.0 || 0")), std::invalid_argument);
}

TEST_CASE("strip_nil output is clean and the map is idempotent") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    TermPtr t = random_open_parfree(rng, 4);
    TermPtr s = strip_nil(t);
    CHECK(nil_clean(s));
    CHECK(equal(strip_nil(s), s));
  }
}

TEST_CASE("strip_nil commutes with zero substitutions") {
  // strip(apply(z, strip(t))) = strip(apply(z, t)) for zero substitutions z
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 300; ++i) {
    TermPtr t = random_open_parfree(rng, 4);
    Subst z;
    if (coin(rng)) z["x"] = Term::nil();
    if (coin(rng)) z["y"] = Term::nil();
    TermPtr a = strip_nil(apply_subst(z, strip_nil(t)));
    TermPtr b = strip_nil(apply_subst(z, t));
    CHECK(ac_equal(a, b));
  }
}

TEST_CASE("nil_class agrees with the semantic deadlock test on closed terms") {
  std::mt19937_64 rng(14);
  for (const RuleSet& rs : representative_rule_sets()) {
    BehCtx ctx(rs);
    int nil = ctx.id(Term::nil());
    for (int i = 0; i < 120; ++i) {
      TermPtr t = random_open_parfree(rng, 3);
      if (!t->closed) continue;
      CHECK(nil_class(t) == (ctx.id(t) == nil));
    }
  }
}

TEST_CASE("every closed term is bisimilar to its ||-free form") {
  std::mt19937_64 rng(15);
  for (const RuleSet& rs : representative_rule_sets()) {
    for (int i = 0; i < 60; ++i) {
      TermPtr t = random_closed(rng, 4);
      CHECK(bisimilar(rs, t, par_to_f(t)));
    }
  }
}

TEST_CASE("stripping preserves behaviour under the left-absorbing rules") {
  // f(p, 0) ~ p and f(0, p) ~ 0 need the all-left rule set
  RuleSet rs = rs_all_left();
  std::mt19937_64 rng(16);
  for (int i = 0; i < 150; ++i) {
    TermPtr t = random_open_parfree(rng, 4);
    if (!t->closed) continue;
    CHECK(bisimilar(rs, t, strip_nil(t)));
  }
}
