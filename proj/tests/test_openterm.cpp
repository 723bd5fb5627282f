#include <functional>
#include <random>

#include "ccsf/lts.hpp"
#include "ccsf/transform.hpp"
#include "ccsf/openterm.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ccsf;
using namespace ccsf::testing;

namespace {

bool has_aux(const std::vector<std::pair<AuxLabel, ConfigPtr>>& entries,
             const std::string& var, Mode m, Act a) {
  for (auto& [lab, c] : entries)
    if (lab.var == var && lab.mode == m && lab.act == a) return true;
  return false;
}

}  // namespace

TEST_CASE("auxiliary transitions of f(x, tau.0)") {
  TermPtr t = T("f(x, tau.0)");
  // left rule for a present: the variable can initiate through f
  auto entries = aux_step(rs_opposed_sync(), t);
  REQUIRE(has_aux(entries, "x", Mode::L, Act::A));
  for (auto& [lab, c] : entries)
    if (lab.mode == Mode::L && lab.act == Act::A) {
      CHECK(c->kind == Config::ParLeft);
      CHECK(c->sub->kind == Config::DVar);
      CHECK(to_string(c) == "(x_d) || tau.0");
    }

  // only a right rule for a: no a-labelled entry survives the f context
  RuleSet right_a = make_rule_set({"a'", "tau"}, {"a"}, {"a/a'"});
  entries = aux_step(right_a, t);
  for (auto& [lab, c] : entries) CHECK(lab.act != Act::A);

  CHECK(aux_step(rs_all_left(), T("0")).empty());
  CHECK(aux_step(rs_all_left(), T("a.x")).empty());
  CHECK_THROWS_AS(aux_step(rs_all_left(), T("x || 0")), std::invalid_argument);
}

TEST_CASE("every auxiliary target is a ||-context around the marker") {
  std::mt19937_64 rng(51);
  for (const RuleSet& rs : representative_rule_sets())
    for (int i = 0; i < 150; ++i) {
      TermPtr t = random_open_parfree(rng, 4);
      for (auto& [lab, c] : aux_step(rs, t)) {
        auto ctx = config_context(c);
        REQUIRE(ctx.has_value());
      }
    }
}

TEST_CASE("trt clauses") {
  RuleSet rs = make_rule_set({"a", "tau"}, {"a'", "tau"}, {"a/a'"});
  TermPtr t = T("f(x, tau.0)");
  CHECK(trt(rs, "x", Mode::L, Act::A, t));
  CHECK(trt(rs, "x", Mode::B, Act::Tau, t));
  CHECK(!trt(rs, "x", Mode::R, Act::A, t));

  RuleSet only_left_a = rs_opposed_sync();
  CHECK(!trt(only_left_a, "x", Mode::R, Act::A, T("f(x, y)")));

  // sum clause defers to the summand
  for (Act mu : kAllActs)
    CHECK(trt(rs, "x", Mode::L, mu, T("x + y")) ==
          trt(rs, "x", Mode::L, mu, T("x")));
}

TEST_CASE("trt coincides with the auxiliary transitions") {
  // exhaustive over all ||-free terms of size <= 5 over {x, y}
  std::vector<TermPtr> universe;
  std::function<void(int, std::function<void(TermPtr)>)> gen =
      [&](int size, std::function<void(TermPtr)> sink) {
        if (size >= 0) {
          sink(Term::var("x"));
          sink(Term::var("y"));
        }
        if (size >= 1) sink(Term::nil());
        if (size >= 1)
          gen(size - 1, [&](TermPtr b) {
            for (Act a : kAllActs) sink(Term::pre(a, b));
          });
        if (size >= 1)
          for (int ls = 0; ls + 1 <= size; ++ls)
            gen(ls, [&](TermPtr l) {
              gen(size - 1 - ls, [&](TermPtr r) {
                sink(Term::sum(l, r));
                sink(Term::fop(l, r));
              });
            });
      };
  std::set<std::string> seen;
  gen(5, [&](TermPtr t) { seen.insert(to_string(t)); });
  std::vector<RuleSet> reps = representative_rule_sets();
  long checked = 0;
  for (const std::string& s : seen) {
    TermPtr t = T(s);
    for (const RuleSet& rs : reps)
      for (Mode m : {Mode::L, Mode::R, Mode::B})
        for (Act a : kAllActs) {
          auto entries = aux_step(rs, t);
          CHECK(trt(rs, "x", m, a, t) == has_aux(entries, "x", m, a));
          ++checked;
        }
  }
  CHECK(checked > 1000);
}

TEST_CASE("open-to-closed and closed-to-open decomposition on examples") {
  RuleSet rs = rs_opposed_sync();
  TermPtr t = T("f(x, tau.0)");
  Subst s{{"x", T("a.0")}};
  DecompReport o2c = check_o2c(rs, t, s);
  CHECK(o2c.checked > 0);
  CHECK(o2c.unexplained.empty());
  DecompReport c2o = check_c2o(rs, t, s);
  CHECK(c2o.unexplained.empty());

  // closed terms only exercise the term-transition case
  DecompReport closed = check_c2o(rs, T("f(a.0, tau.0)"), {});
  CHECK(closed.unexplained.empty());
}

TEST_CASE("decomposition properties on random instances") {
  std::mt19937_64 rng(52);
  long total = 0;
  for (const RuleSet& rs : representative_rule_sets()) {
    for (int i = 0; i < 60; ++i) {
      TermPtr t = random_open_parfree(rng, 3);
      Subst s{{"x", random_tree(rng, 2)}, {"y", random_tree(rng, 2)}};
      DecompReport a = check_o2c(rs, t, s);
      DecompReport b = check_c2o(rs, t, s);
      CHECK(a.unexplained.empty());
      CHECK(b.unexplained.empty());
      total += a.checked + b.checked;
    }
  }
  CHECK(total > 300);
}

TEST_CASE("substitution preserves term transitions") {
  std::mt19937_64 rng(53);
  for (const RuleSet& rs : representative_rule_sets())
    for (int i = 0; i < 80; ++i) {
      TermPtr t = random_open_parfree(rng, 3);
      Subst s{{"x", random_tree(rng, 2)}, {"y", random_tree(rng, 2)}};
      TermPtr inst = apply_subst(s, t);
      auto inst_moves = step(rs, inst);
      for (auto& [mu, t2] : step_term(rs, t)) {
        TermPtr want = canon(apply_subst(s, t2));
        bool found = false;
        for (auto& [nu, q] : inst_moves)
          if (nu == mu && equal(q, want)) found = true;
        CHECK(found);
      }
    }
}

TEST_CASE("blocked variables break the depth inequality") {
  // rules: left for a and tau, right for a' only; x sits on the left of f
  RuleSet rs = rs_opposed_sync();
  TermPtr t = T("f(x, tau.0)");
  Subst s{{"x", T("a.0 + tau.0 + a'.a.a.0")}};
  TrtDepthReport rep = check_trt_depth(rs, t, s, "x");
  CHECK(!rep.pre_holds);  // the a' move of s(x) has no mode through f
  CHECK(rep.depth_t == 2);
  CHECK(rep.depth_x == 3);
  CHECK(!rep.inequality_holds);
}

TEST_CASE("depth inequality holds when the initials are covered") {
  RuleSet rs = rs_opposed_sync();
  // identity context
  Subst s{{"x", T("a.a.0")}};
  TrtDepthReport rep = check_trt_depth(rs, T("x"), s, "x");
  CHECK(rep.pre_holds);
  CHECK(rep.depth_t == rep.depth_x);

  std::mt19937_64 rng(54);
  int positives = 0;
  for (int i = 0; i < 300; ++i) {
    TermPtr t = random_open_parfree(rng, 3);
    if (!nil_clean(t)) continue;
    Subst sub{{"x", random_tree(rng, 2)}, {"y", random_tree(rng, 2)}};
    for (const RuleSet& r : representative_rule_sets()) {
      TrtDepthReport rr = check_trt_depth(r, t, sub, "x");
      if (rr.pre_holds) {
        CHECK(rr.inequality_holds);
        ++positives;
      }
    }
  }
  CHECK(positives > 20);
}
