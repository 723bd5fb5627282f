#include "ccsf/eqlogic.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "ccsf/behaviour.hpp"
#include "ccsf/parser.hpp"
#include "ccsf/transform.hpp"

namespace ccsf {

bool eq_ac_equal(const Equation& a, const Equation& b) {
  return ac_equal(a.lhs, b.lhs) && ac_equal(a.rhs, b.rhs);
}

namespace {

void collect_vars_in_order(const TermPtr& t, std::vector<std::string>& order,
                           std::set<std::string>& seen) {
  switch (t->op) {
    case Op::Var:
      if (seen.insert(t->name).second) order.push_back(t->name);
      break;
    case Op::Prefix:
      collect_vars_in_order(t->left, order, seen);
      break;
    case Op::Sum:
    case Op::Par:
    case Op::F:
      collect_vars_in_order(t->left, order, seen);
      collect_vars_in_order(t->right, order, seen);
      break;
    case Op::Nil:
      break;
  }
}

// Key identifying an equation modulo AC and variable renaming.
std::string eq_key(const Equation& eq) {
  TermPtr l = canon(eq.lhs), r = canon(eq.rhs);
  std::vector<std::string> order;
  std::set<std::string> seen;
  collect_vars_in_order(l, order, seen);
  collect_vars_in_order(r, order, seen);
  Subst rename;
  for (size_t i = 0; i < order.size(); ++i)
    rename[order[i]] = Term::var("v" + std::to_string(i));
  return to_string(canon(apply_subst(rename, l))) + " = " +
         to_string(canon(apply_subst(rename, r)));
}

}  // namespace

int AxiomSystem::find(const Equation& eq) const {
  std::string key = eq_key(eq);
  for (size_t i = 0; i < axioms.size(); ++i)
    if (eq_key(axioms[i].eq) == key) return static_cast<int>(i);
  return -1;
}

bool symmetry_closed(const AxiomSystem& e) {
  for (const Axiom& ax : e.axioms)
    if (!e.contains({ax.eq.rhs, ax.eq.lhs})) return false;
  return true;
}

AxiomSystem symmetry_close(const AxiomSystem& e) {
  AxiomSystem out = e;
  for (const Axiom& ax : e.axioms) {
    Equation flipped{ax.eq.rhs, ax.eq.lhs};
    if (!out.contains(flipped)) out.axioms.push_back({ax.name + "'", flipped});
  }
  return out;
}

AxiomSystem saturate(const AxiomSystem& e) {
  // dedup modulo AC only: instances that differ in variable names stay
  auto plain_key = [](const Equation& eq) {
    return to_string(canon(eq.lhs)) + " = " + to_string(canon(eq.rhs));
  };
  AxiomSystem out = e;
  std::set<std::string> keys;
  for (const Axiom& ax : e.axioms) keys.insert(plain_key(ax.eq));
  for (const Axiom& ax : e.axioms) {
    if (contains_par(ax.eq.lhs) || contains_par(ax.eq.rhs))
      throw std::invalid_argument("saturate: axiom '" + ax.name +
                                  "' contains ||");
    std::vector<std::string> vars;
    {
      std::set<std::string> vs = free_vars(ax.eq.lhs);
      for (const auto& v : free_vars(ax.eq.rhs)) vs.insert(v);
      vars.assign(vs.begin(), vs.end());
    }
    size_t subsets = size_t{1} << vars.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
      Subst zero;
      for (size_t i = 0; i < vars.size(); ++i)
        if (mask & (size_t{1} << i)) zero[vars[i]] = Term::nil();
      Equation inst{strip_nil(apply_subst(zero, ax.eq.lhs)),
                    strip_nil(apply_subst(zero, ax.eq.rhs))};
      if (keys.insert(plain_key(inst)).second)
        out.axioms.push_back({ax.name + "/0x" + std::to_string(mask), inst});
    }
  }
  return out;
}

bool is_saturated(const AxiomSystem& e) {
  return saturate(e).axioms.size() == e.axioms.size();
}

AxiomSystem parse_axioms(const std::string& text, const std::string& name) {
  AxiomSystem e;
  e.name = name;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    size_t first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;
    size_t sep = trimmed.find('=');
    if (sep == std::string::npos)
      throw std::runtime_error(name + ":" + std::to_string(lineno) +
                               ": missing '='");
    Equation eq{parse_term(trimmed.substr(0, sep)),
                parse_term(trimmed.substr(sep + 1))};
    e.axioms.push_back({"eq" + std::to_string(lineno), eq});
  }
  return e;
}

AxiomSystem load_axioms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open axiom file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_axioms(ss.str(), path);
}

std::string axioms_to_text(const AxiomSystem& e) {
  std::string out;
  for (const Axiom& ax : e.axioms) {
    out += "# " + ax.name + "\n";
    out += to_string(ax.eq.lhs) + " = " + to_string(ax.eq.rhs) + "\n";
  }
  return out;
}

// ---- proofs -----------------------------------------------------------

std::string prule_name(PRule r) {
  switch (r) {
    case PRule::AxiomInst:
      return "axiom";
    case PRule::Refl:
      return "refl";
    case PRule::Sym:
      return "sym";
    case PRule::Trans:
      return "trans";
    case PRule::CongPrefix:
      return "cong-prefix";
    case PRule::CongSum:
      return "cong-sum";
    case PRule::CongF:
      return "cong-f";
    case PRule::CongPar:
      return "cong-par";
  }
  return "?";
}

ProofPtr Proof::axiom_inst(const AxiomSystem& e, int idx, Subst s) {
  auto p = std::make_shared<Proof>();
  p->rule = PRule::AxiomInst;
  p->axiom = idx;
  p->subst = s;
  p->concl = {apply_subst(s, e.axioms[idx].eq.lhs), apply_subst(s, e.axioms[idx].eq.rhs)};
  return p;
}

ProofPtr Proof::refl(TermPtr t) {
  auto p = std::make_shared<Proof>();
  p->rule = PRule::Refl;
  p->concl = {t, t};
  return p;
}

ProofPtr Proof::sym(ProofPtr child) {
  auto p = std::make_shared<Proof>();
  p->rule = PRule::Sym;
  p->concl = {child->concl.rhs, child->concl.lhs};
  p->a = std::move(child);
  return p;
}

ProofPtr Proof::trans(ProofPtr x, ProofPtr y) {
  auto p = std::make_shared<Proof>();
  p->rule = PRule::Trans;
  p->concl = {x->concl.lhs, y->concl.rhs};
  p->a = std::move(x);
  p->b = std::move(y);
  return p;
}

ProofPtr Proof::cong_prefix(Act mu, ProofPtr child) {
  auto p = std::make_shared<Proof>();
  p->rule = PRule::CongPrefix;
  p->act = mu;
  p->concl = {Term::pre(mu, child->concl.lhs), Term::pre(mu, child->concl.rhs)};
  p->a = std::move(child);
  return p;
}

namespace {
ProofPtr cong2(PRule rule, ProofPtr x, ProofPtr y) {
  auto p = std::make_shared<Proof>();
  p->rule = rule;
  auto join = [&](const TermPtr& l, const TermPtr& r) {
    switch (rule) {
      case PRule::CongSum:
        return Term::sum(l, r);
      case PRule::CongF:
        return Term::fop(l, r);
      default:
        return Term::par(l, r);
    }
  };
  p->concl = {join(x->concl.lhs, y->concl.lhs), join(x->concl.rhs, y->concl.rhs)};
  p->a = std::move(x);
  p->b = std::move(y);
  return p;
}
}  // namespace

ProofPtr Proof::cong_sum(ProofPtr x, ProofPtr y) {
  return cong2(PRule::CongSum, std::move(x), std::move(y));
}
ProofPtr Proof::cong_f(ProofPtr x, ProofPtr y) {
  return cong2(PRule::CongF, std::move(x), std::move(y));
}
ProofPtr Proof::cong_par(ProofPtr x, ProofPtr y) {
  return cong2(PRule::CongPar, std::move(x), std::move(y));
}

namespace {

bool check_node(const AxiomSystem& e, const ProofPtr& p, const std::string& path,
                CheckResult& res) {
  auto fail = [&](const std::string& msg) {
    res.ok = false;
    res.node = path;
    res.message = msg;
    return false;
  };
  switch (p->rule) {
    case PRule::AxiomInst: {
      if (p->axiom < 0 || p->axiom >= static_cast<int>(e.axioms.size()))
        return fail("axiom index out of range");
      const Equation& ax = e.axioms[p->axiom].eq;
      if (!ac_equal(p->concl.lhs, apply_subst(p->subst, ax.lhs)) ||
          !ac_equal(p->concl.rhs, apply_subst(p->subst, ax.rhs)))
        return fail("conclusion is not the stated instance of axiom " +
                    e.axioms[p->axiom].name);
      return true;
    }
    case PRule::Refl:
      if (!ac_equal(p->concl.lhs, p->concl.rhs))
        return fail("reflexivity with distinct sides");
      return true;
    case PRule::Sym: {
      if (!p->a) return fail("symmetry without premise");
      if (!check_node(e, p->a, path + ".1", res)) return false;
      if (!ac_equal(p->concl.lhs, p->a->concl.rhs) ||
          !ac_equal(p->concl.rhs, p->a->concl.lhs))
        return fail("symmetry conclusion does not flip the premise");
      return true;
    }
    case PRule::Trans: {
      if (!p->a || !p->b) return fail("transitivity needs two premises");
      if (!check_node(e, p->a, path + ".1", res)) return false;
      if (!check_node(e, p->b, path + ".2", res)) return false;
      if (!ac_equal(p->a->concl.rhs, p->b->concl.lhs))
        return fail("transitivity premises do not meet");
      if (!ac_equal(p->concl.lhs, p->a->concl.lhs) ||
          !ac_equal(p->concl.rhs, p->b->concl.rhs))
        return fail("transitivity conclusion mismatch");
      return true;
    }
    case PRule::CongPrefix: {
      if (!p->a) return fail("prefix congruence without premise");
      if (!check_node(e, p->a, path + ".1", res)) return false;
      if (!ac_equal(p->concl.lhs, Term::pre(p->act, p->a->concl.lhs)) ||
          !ac_equal(p->concl.rhs, Term::pre(p->act, p->a->concl.rhs)))
        return fail("prefix congruence shape violated");
      return true;
    }
    case PRule::CongSum:
    case PRule::CongF:
    case PRule::CongPar: {
      if (!p->a || !p->b) return fail("congruence needs two premises");
      if (!check_node(e, p->a, path + ".1", res)) return false;
      if (!check_node(e, p->b, path + ".2", res)) return false;
      auto join = [&](const TermPtr& l, const TermPtr& r) {
        switch (p->rule) {
          case PRule::CongSum:
            return Term::sum(l, r);
          case PRule::CongF:
            return Term::fop(l, r);
          default:
            return Term::par(l, r);
        }
      };
      if (!ac_equal(p->concl.lhs, join(p->a->concl.lhs, p->b->concl.lhs)) ||
          !ac_equal(p->concl.rhs, join(p->a->concl.rhs, p->b->concl.rhs)))
        return fail("congruence shape violated");
      return true;
    }
  }
  return fail("unknown rule");
}

}  // namespace

CheckResult check_proof(const AxiomSystem& e, const ProofPtr& pr) {
  CheckResult res;
  if (!pr) {
    res.ok = false;
    res.node = "root";
    res.message = "empty proof";
    return res;
  }
  check_node(e, pr, "root", res);
  return res;
}

size_t proof_nodes(const ProofPtr& pr) {
  if (!pr) return 0;
  return 1 + proof_nodes(pr->a) + proof_nodes(pr->b);
}

// ---- soundness --------------------------------------------------------

SoundVerdict sound(const RuleSet& rs, const Equation& eq,
                   const SyncTreeEnumerator& en) {
  SoundVerdict v;
  std::vector<std::string> vars;
  {
    std::set<std::string> vs = free_vars(eq.lhs);
    for (const auto& x : free_vars(eq.rhs)) vs.insert(x);
    vars.assign(vs.begin(), vs.end());
  }
  std::vector<TermPtr> trees = en.all();
  BehCtx ctx(rs);
  if (vars.empty()) {
    v.combinations = 1;
    if (ctx.id(eq.lhs) != ctx.id(eq.rhs)) v.refuted = true;
    return v;
  }
  std::vector<size_t> odo(vars.size(), 0);
  while (true) {
    Subst s;
    for (size_t i = 0; i < vars.size(); ++i) s[vars[i]] = trees[odo[i]];
    ++v.combinations;
    if (ctx.id(apply_subst(s, eq.lhs)) != ctx.id(apply_subst(s, eq.rhs))) {
      v.refuted = true;
      v.counterexample = s;
      return v;
    }
    size_t i = 0;
    for (; i < odo.size(); ++i) {
      if (++odo[i] < trees.size()) break;
      odo[i] = 0;
    }
    if (i == odo.size()) break;
  }
  return v;
}

std::vector<AxiomVerdict> sound_axioms(const RuleSet& rs, const AxiomSystem& e,
                                       const SyncTreeEnumerator& en) {
  std::vector<AxiomVerdict> out;
  for (const Axiom& ax : e.axioms) out.push_back({ax.name, sound(rs, ax.eq, en)});
  return out;
}

// ---- standard axioms and helper proofs ---------------------------------

AxiomSystem standard_axioms() {
  auto x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  auto n = Term::nil();
  AxiomSystem e;
  e.name = "standard";
  e.axioms = {
      {"A1", {Term::sum(x, x), x}},
      {"A2", {Term::sum(x, y), Term::sum(y, x)}},
      {"A3", {Term::sum(Term::sum(x, y), z), Term::sum(x, Term::sum(y, z))}},
      {"A4", {Term::sum(x, n), x}},
      {"F0", {Term::fop(n, n), n}},
      {"F1", {Term::fop(n, x), n}},
      {"F2", {Term::fop(x, n), x}},
  };
  return e;
}

bool has_standard_axioms(const AxiomSystem& e) {
  for (const Axiom& ax : standard_axioms().axioms)
    if (!e.contains(ax.eq)) return false;
  return true;
}

namespace {

int required(const AxiomSystem& e, const Equation& pattern, const char* name) {
  int idx = e.find(pattern);
  if (idx < 0)
    throw std::invalid_argument(std::string("axiom system lacks ") + name);
  return idx;
}

struct StdIdx {
  int a1, a4, f1, f2;
  explicit StdIdx(const AxiomSystem& e) {
    AxiomSystem s = standard_axioms();
    a1 = required(e, s.axioms[0].eq, "A1");
    a4 = required(e, s.axioms[3].eq, "A4");
    f1 = required(e, s.axioms[5].eq, "F1");
    f2 = required(e, s.axioms[6].eq, "F2");
  }
};

// Instantiates axiom idx of e so that its sides become the given equation;
// the axiom is matched against the instance shape by name of its variables.
ProofPtr inst(const AxiomSystem& e, int idx, Subst s) {
  return Proof::axiom_inst(e, idx, std::move(s));
}

std::string axiom_var(const AxiomSystem& e, int idx) {
  // single-variable standard axioms use x; fetch it robustly
  auto vs = free_vars(e.axioms[idx].eq.lhs);
  if (vs.empty()) return "x";
  return *vs.begin();
}

// Proof of t ~ 0 for t in the syntactic nil class.
ProofPtr nil_proof(const AxiomSystem& e, const StdIdx& ids, const TermPtr& t) {
  if (t->op == Op::Nil) return Proof::refl(t);
  if (t->op == Op::Sum) {
    ProofPtr both =
        Proof::cong_sum(nil_proof(e, ids, t->left), nil_proof(e, ids, t->right));
    ProofPtr collapse =
        inst(e, ids.a4, {{axiom_var(e, ids.a4), Term::nil()}});  // 0+0 ~ 0
    return Proof::trans(both, collapse);
  }
  if (t->op == Op::F) {
    ProofPtr left = Proof::cong_f(nil_proof(e, ids, t->left), Proof::refl(t->right));
    ProofPtr f1 = inst(e, ids.f1, {{axiom_var(e, ids.f1), t->right}});
    return Proof::trans(left, f1);
  }
  throw std::logic_error("nil_proof: term is not in the nil class");
}

ProofPtr strip_proof_rec(const AxiomSystem& e, const StdIdx& ids,
                         const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      return Proof::refl(t);
    case Op::Prefix:
      return Proof::cong_prefix(t->act, strip_proof_rec(e, ids, t->left));
    case Op::Sum: {
      if (nil_class(t->left)) {
        ProofPtr drop = Proof::cong_sum(nil_proof(e, ids, t->left),
                                        Proof::refl(t->right));  // t ~ 0+r
        ProofPtr a4 = inst(e, ids.a4, {{axiom_var(e, ids.a4), t->right}});
        return Proof::trans(Proof::trans(drop, a4),
                            strip_proof_rec(e, ids, t->right));
      }
      if (nil_class(t->right)) {
        ProofPtr drop = Proof::cong_sum(Proof::refl(t->left),
                                        nil_proof(e, ids, t->right));  // t ~ l+0
        ProofPtr a4 = inst(e, ids.a4, {{axiom_var(e, ids.a4), t->left}});
        return Proof::trans(Proof::trans(drop, a4),
                            strip_proof_rec(e, ids, t->left));
      }
      return Proof::cong_sum(strip_proof_rec(e, ids, t->left),
                             strip_proof_rec(e, ids, t->right));
    }
    case Op::F: {
      if (nil_class(t->left)) {
        ProofPtr drop =
            Proof::cong_f(nil_proof(e, ids, t->left), Proof::refl(t->right));
        ProofPtr f1 = inst(e, ids.f1, {{axiom_var(e, ids.f1), t->right}});
        return Proof::trans(drop, f1);
      }
      if (nil_class(t->right)) {
        ProofPtr drop =
            Proof::cong_f(Proof::refl(t->left), nil_proof(e, ids, t->right));
        ProofPtr f2 = inst(e, ids.f2, {{axiom_var(e, ids.f2), t->left}});
        return Proof::trans(Proof::trans(drop, f2),
                            strip_proof_rec(e, ids, t->left));
      }
      return Proof::cong_f(strip_proof_rec(e, ids, t->left),
                           strip_proof_rec(e, ids, t->right));
    }
    case Op::Par:
      throw std::invalid_argument("strip_nil_proof: term contains ||");
  }
  return Proof::refl(t);
}

}  // namespace

ProofPtr strip_nil_proof(const AxiomSystem& e, const TermPtr& t) {
  StdIdx ids(e);
  return strip_proof_rec(e, ids, t);
}

namespace {

TermPtr dedup_canon(const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      return t;
    case Op::Prefix:
      return Term::pre(t->act, dedup_canon(t->left));
    case Op::Par:
      return Term::par(dedup_canon(t->left), dedup_canon(t->right));
    case Op::F:
      return Term::fop(dedup_canon(t->left), dedup_canon(t->right));
    case Op::Sum: {
      std::vector<TermPtr> parts = summands(t);
      for (auto& p : parts) p = dedup_canon(p);
      std::sort(parts.begin(), parts.end(),
                [](const TermPtr& x, const TermPtr& y) { return cmp(x, y) < 0; });
      parts.erase(std::unique(parts.begin(), parts.end(),
                              [](const TermPtr& x, const TermPtr& y) {
                                return equal(x, y);
                              }),
                  parts.end());
      return sum_of(parts);
    }
  }
  return t;
}

// Proof of t ~ dedup_canon(t) using only idempotence of +.
ProofPtr aci_proof(const AxiomSystem& e, int a1, const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      return Proof::refl(t);
    case Op::Prefix:
      return Proof::cong_prefix(t->act, aci_proof(e, a1, t->left));
    case Op::Par:
      return Proof::cong_par(aci_proof(e, a1, t->left), aci_proof(e, a1, t->right));
    case Op::F:
      return Proof::cong_f(aci_proof(e, a1, t->left), aci_proof(e, a1, t->right));
    case Op::Sum: {
      // normalise the summands first, following the actual sum shape
      std::function<ProofPtr(const TermPtr&)> along = [&](const TermPtr& u) {
        if (u->op == Op::Sum)
          return Proof::cong_sum(along(u->left), along(u->right));
        return aci_proof(e, a1, u);
      };
      ProofPtr p = along(t);
      // contract duplicates one at a time
      while (true) {
        std::vector<TermPtr> parts = summands(canon(p->concl.rhs));
        size_t dup = parts.size();
        for (size_t i = 0; i + 1 < parts.size(); ++i)
          if (equal(parts[i], parts[i + 1])) {
            dup = i;
            break;
          }
        if (dup == parts.size()) break;
        TermPtr d = parts[dup];
        std::vector<TermPtr> rest;
        for (size_t i = 0; i < parts.size(); ++i)
          if (i != dup && i != dup + 1) rest.push_back(parts[i]);
        ProofPtr contract = Proof::axiom_inst(e, a1, {{axiom_var(e, a1), d}});
        ProofPtr step = rest.empty()
                            ? contract
                            : Proof::cong_sum(contract, Proof::refl(sum_of(rest)));
        p = Proof::trans(p, step);
      }
      return p;
    }
  }
  return Proof::refl(t);
}

}  // namespace

ProofPtr dedup_proof(const AxiomSystem& e, const TermPtr& t, const TermPtr& u) {
  AxiomSystem s = standard_axioms();
  int a1 = e.find(s.axioms[0].eq);
  if (a1 < 0) throw std::invalid_argument("dedup_proof: axiom system lacks A1");
  ProofPtr pt = aci_proof(e, a1, t);
  ProofPtr pu = aci_proof(e, a1, u);
  if (!ac_equal(pt->concl.rhs, pu->concl.rhs))
    throw std::invalid_argument("dedup_proof: terms differ modulo idempotence");
  return Proof::trans(pt, Proof::sym(pu));
}

// ---- ||-elimination lifting --------------------------------------------

AxiomSystem par_to_f_system(const AxiomSystem& e) {
  AxiomSystem out;
  out.name = e.name + "^";
  for (const Axiom& ax : e.axioms)
    out.axioms.push_back(
        {ax.name, {par_to_f(ax.eq.lhs), par_to_f(ax.eq.rhs)}});
  return out;
}

ProofPtr par_to_f_proof(const ProofPtr& pr) {
  if (!pr) return pr;
  switch (pr->rule) {
    case PRule::AxiomInst: {
      auto p = std::make_shared<Proof>();
      p->rule = PRule::AxiomInst;
      p->axiom = pr->axiom;
      for (auto& [k, v] : pr->subst) p->subst[k] = par_to_f(v);
      p->concl = {par_to_f(pr->concl.lhs), par_to_f(pr->concl.rhs)};
      return p;
    }
    case PRule::Refl:
      return Proof::refl(par_to_f(pr->concl.lhs));
    case PRule::Sym:
      return Proof::sym(par_to_f_proof(pr->a));
    case PRule::Trans:
      return Proof::trans(par_to_f_proof(pr->a), par_to_f_proof(pr->b));
    case PRule::CongPrefix:
      return Proof::cong_prefix(pr->act, par_to_f_proof(pr->a));
    case PRule::CongSum:
      return Proof::cong_sum(par_to_f_proof(pr->a), par_to_f_proof(pr->b));
    case PRule::CongF:
      return Proof::cong_f(par_to_f_proof(pr->a), par_to_f_proof(pr->b));
    case PRule::CongPar: {
      ProofPtr l = par_to_f_proof(pr->a);
      ProofPtr r = par_to_f_proof(pr->b);
      return Proof::cong_sum(Proof::cong_f(l, r), Proof::cong_f(r, l));
    }
  }
  return pr;
}

}  // namespace ccsf
