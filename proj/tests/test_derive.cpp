#include "ccsf/catalog.hpp"
#include "ccsf/derive.hpp"
#include "ccsf/opspace.hpp"
#include "ccsf/witness.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ccsf;
using namespace ccsf::testing;

namespace {

AxiomSystem std_sat() { return saturate(symmetry_close(standard_axioms())); }

AxiomSystem plus_laws() {
  return saturate(
      symmetry_close(catalog_selection({"A1", "A2", "A3", "A4"}, "plus")));
}

}  // namespace

TEST_CASE("goal absorbed by the unit and idempotence laws") {
  DeriveResult r =
      bounded_derivable(plus_laws(), {T("a.0 + 0 + a.0"), T("a.0")});
  REQUIRE(r.verdict == DeriveVerdict::Derivable);
  CHECK(check_proof(plus_laws(), r.proof).ok);
  CHECK(ac_equal(r.proof->concl.lhs, T("a.0 + 0 + a.0")));
  CHECK(ac_equal(r.proof->concl.rhs, T("a.0")));
}

TEST_CASE("reflexive goals need no axioms") {
  AxiomSystem empty;
  DeriveResult r = bounded_derivable(empty, {T("a.0 + a'.0"), T("a'.0 + a.0")});
  REQUIRE(r.verdict == DeriveVerdict::Derivable);
  CHECK(check_proof(empty, r.proof).ok);
}

TEST_CASE("open goals and unclosed systems are rejected") {
  CHECK_THROWS_AS(bounded_derivable(std_sat(), {T("x"), T("x")}),
                  std::invalid_argument);
  AxiomSystem asym;
  asym.axioms.push_back({"G", {T("f(x, 0)"), T("x")}});
  CHECK_THROWS_AS(bounded_derivable(asym, {T("a.0"), T("a.0")}),
                  std::invalid_argument);
}

TEST_CASE("witness equations stay underivable from the standard system") {
  AxiomSystem e = std_sat();
  OperatorClass oc = dispatch(rs_all_left());
  for (int n = 0; n <= 2; ++n) {
    WitnessFamily wf = witness_terms(oc, n);
    DeriveResult r = bounded_derivable(e, wf.en, {30, 8});
    CHECK(r.verdict == DeriveVerdict::Exhausted);
  }
}

TEST_CASE("adding the base witness equation makes its variants derivable") {
  OperatorClass oc = dispatch(rs_all_left());
  WitnessFamily e0 = witness_terms(oc, 0);
  AxiomSystem base = standard_axioms();
  base.axioms.push_back({"W0", e0.en});
  AxiomSystem e = saturate(symmetry_close(base));
  Equation goal{Term::sum(e0.en.lhs, e0.en.lhs), e0.en.rhs};
  DeriveResult r = bounded_derivable(e, goal, {30, 8});
  REQUIRE(r.verdict == DeriveVerdict::Derivable);
  CHECK(check_proof(e, r.proof).ok);
}

TEST_CASE("oversized goals are exhausted by the size cap") {
  AxiomSystem e = std_sat();
  OperatorClass oc = dispatch(rs_all_left());
  WitnessFamily wf = witness_terms(oc, 5);
  CHECK(static_cast<int>(wf.en.rhs->size) > 30);
  DeriveResult r = bounded_derivable(e, wf.en, {30, 8});
  CHECK(r.verdict == DeriveVerdict::Exhausted);
  CHECK(r.note.find("size") != std::string::npos);
}

TEST_CASE("saturation does not change bounded provability") {
  AxiomSystem base = standard_axioms();
  base.axioms.push_back(
      {"G", {T("f(a.x + w, 0)"), T("f(w, 0)")}});  // right rules absent
  AxiomSystem unsat = symmetry_close(base);
  AxiomSystem sat = saturate(unsat);
  CHECK(sat.axioms.size() > unsat.axioms.size());
  std::vector<Equation> goals = {
      {T("a.0 + 0 + a.0"), T("a.0")},
      {T("f(a.a.0 + tau.0, 0)"), T("tau.0")},
      {T("a.a.0"), T("a.0")},  // not derivable either way
  };
  for (const Equation& g : goals) {
    DeriveResult r1 = bounded_derivable(unsat, g, {20, 6});
    DeriveResult r2 = bounded_derivable(sat, g, {20, 6});
    CHECK((r1.verdict == DeriveVerdict::Derivable) ==
          (r2.verdict == DeriveVerdict::Derivable));
    if (r1.verdict == DeriveVerdict::Derivable) {
      CHECK(check_proof(unsat, r1.proof).ok);
      CHECK(check_proof(sat, r2.proof).ok);
    }
  }
}

TEST_CASE("rewrites that grow a summand into a sum still assemble proofs") {
  // no idempotence in the system, so the duplication step is a real edge
  AxiomSystem dup;
  dup.axioms.push_back({"D", {T("tau.x"), T("tau.x + tau.x")}});
  AxiomSystem e = symmetry_close(dup);
  Equation goal{T("tau.0 + a.0"), T("(tau.0 + tau.0) + a.0")};
  DeriveResult r = bounded_derivable(e, goal, {20, 4});
  REQUIRE(r.verdict == DeriveVerdict::Derivable);
  CheckResult c = check_proof(e, r.proof);
  CHECK(c.ok);
  CHECK(ac_equal(r.proof->concl.lhs, goal.lhs));
  CHECK(ac_equal(r.proof->concl.rhs, goal.rhs));
}

TEST_CASE("all summand assignments of a blocking axiom are explored") {
  // two ways to split the sum against a'.x + w; only one reaches the goal
  AxiomSystem blk;
  blk.axioms.push_back({"B", {T("f(a'.x + w, tau.y)"), T("f(w, tau.y)")}});
  AxiomSystem e = symmetry_close(blk);
  Equation goal{T("f(a'.a.0 + a'.0, tau.0)"), T("f(a'.0, tau.0)")};
  DeriveResult r = bounded_derivable(e, goal, {20, 3});
  REQUIRE(r.verdict == DeriveVerdict::Derivable);
  CHECK(check_proof(e, r.proof).ok);
}

TEST_CASE("proofs returned by the search always check") {
  AxiomSystem e = std_sat();
  std::vector<Equation> goals = {
      {T("a.(a.0 + 0)"), T("a.a.0")},
      {T("f(a.0 + a.0, tau.0)"), T("f(a.0, tau.0)")},
      {T("tau.0 + f(0, a.0)"), T("tau.0")},
  };
  for (const Equation& g : goals) {
    DeriveResult r = bounded_derivable(e, g, {25, 6});
    REQUIRE(r.verdict == DeriveVerdict::Derivable);
    CheckResult c = check_proof(e, r.proof);
    CHECK(c.ok);
    CHECK(ac_equal(r.proof->concl.lhs, g.lhs));
    CHECK(ac_equal(r.proof->concl.rhs, g.rhs));
  }
}
