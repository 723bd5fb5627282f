#include "ccsf/behaviour.hpp"
#include "ccsf/bisim.hpp"
#include "ccsf/lts.hpp"
#include "ccsf/prime.hpp"
#include "ccsf/witness.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ccsf;
using namespace ccsf::testing;

TEST_CASE("depth-one processes are prime") {
  SyncTreeEnumerator en{1, 3, 3};
  CHECK(is_prime(rs_all_left(), T("a.0"), en));
  CHECK(is_prime(rs_all_left(), T("a.0 + tau.0"), en));
  CHECK(!is_prime(rs_all_left(), T("0"), en));  // primes are not ~ 0
}

TEST_CASE("ladders are prime") {
  for (int m = 1; m <= 4; ++m) {
    SyncTreeEnumerator en{m, 3, 6};
    CHECK(is_prime(rs_all_left(), ladder(Act::A, m), en));
    CHECK(is_prime(rs_both_sides(), ladder(Act::Tau, m), en));
  }
}

TEST_CASE("parallel squares are composite") {
  SyncTreeEnumerator en{2, 3, 4};
  CHECK(!is_prime(rs_all_left(), T("a.0 || a.0"), en));
  CHECK(!is_prime(rs_all_left(), T("a.0 || a'.0"), en));
}

TEST_CASE("bounds are enforced") {
  SyncTreeEnumerator en{1, 3, 3};
  CHECK_THROWS_AS(is_prime(rs_all_left(), T("a.a.a.0"), en), BoundsError);
}

TEST_CASE("prime decomposition examples") {
  SyncTreeEnumerator en{3, 3, 6};
  CHECK(prime_decompose(rs_all_left(), T("0"), en).empty());

  auto fs = prime_decompose(rs_all_left(),
                            Term::par(T("a.0"), ladder(Act::A, 2)), en);
  REQUIRE(fs.size() == 2);
  BehCtx ctx(rs_all_left());
  std::multiset<int> got{ctx.id(fs[0]), ctx.id(fs[1])};
  std::multiset<int> want{ctx.id(T("a.0")), ctx.id(ladder(Act::A, 2))};
  CHECK(got == want);
}

TEST_CASE("the one-sided witness process is its own decomposition") {
  RuleSet rs = rs_all_left();
  TermPtr w = Term::fop(T("a.0"), ladder_sum(Act::ABar, Act::A, 2));
  SyncTreeEnumerator en{depth(rs, w), 3, 4};
  auto fs = prime_decompose(rs, w, en);
  REQUIRE(fs.size() == 1);
  CHECK(bisimilar(rs, fs[0], w));
}

TEST_CASE("decomposition recomposes and is unique on a small universe") {
  RuleSet rs = rs_both_sides();
  BehCtx ctx(rs);
  SyncTreeEnumerator pieces{2, 2, 3};
  std::vector<TermPtr> universe;
  for (const TermPtr& t : pieces.all()) universe.push_back(t);
  std::vector<TermPtr> trees = pieces.all();
  for (size_t i = 0; i < trees.size(); i += 7)
    for (size_t j = 0; j < trees.size(); j += 11)
      universe.push_back(Term::par(trees[i], trees[j]));
  SyncTreeEnumerator factors{4, 3, 4};
  for (const TermPtr& p : universe) {
    if (depth(rs, p) > factors.max_depth) continue;
    auto fs = prime_decompose(rs, p, factors);
    TermPtr recomposed = Term::nil();
    for (const TermPtr& f : fs) {
      CHECK(is_prime(rs, f, factors));
      recomposed = recomposed->op == Op::Nil ? f : Term::par(recomposed, f);
    }
    CHECK(ctx.id(recomposed) == ctx.id(p));
  }
}
