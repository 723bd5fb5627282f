#include "ccsf/term.hpp"

#include <algorithm>
#include <functional>

namespace ccsf {

Act complement_of(Act a) {
  switch (a) {
    case Act::A:
      return Act::ABar;
    case Act::ABar:
      return Act::A;
    case Act::Tau:
      throw std::invalid_argument("complement of tau is undefined");
  }
  throw std::invalid_argument("bad action");
}

std::string act_name(Act a) {
  switch (a) {
    case Act::A:
      return "a";
    case Act::ABar:
      return "a'";
    case Act::Tau:
      return "tau";
  }
  return "?";
}

Act act_from_name(const std::string& s) {
  if (s == "a") return Act::A;
  if (s == "a'") return Act::ABar;
  if (s == "tau") return Act::Tau;
  throw std::invalid_argument("unknown action '" + s + "'");
}

namespace {

uint32_t mix(uint32_t h, uint32_t v) {
  h ^= v + 0x9e3779b9u + (h << 6) + (h >> 2);
  return h;
}

uint32_t str_hash(const std::string& s) {
  uint32_t h = 2166136261u;
  for (char c : s) h = (h ^ static_cast<uint8_t>(c)) * 16777619u;
  return h;
}

}  // namespace

Term::Term(Op o, Act a, std::string n, TermPtr l, TermPtr r, uint32_t sz,
           bool cl, uint32_t h)
    : op(o),
      act(a),
      name(std::move(n)),
      left(std::move(l)),
      right(std::move(r)),
      size(sz),
      closed(cl),
      hash(h) {}

TermPtr Term::nil() {
  static const TermPtr instance(
      new Term(Op::Nil, Act::A, "", nullptr, nullptr, 1, true, 0x9bf0a11du));
  return instance;
}

TermPtr Term::var(std::string n) {
  uint32_t h = mix(1, str_hash(n));
  return TermPtr(
      new Term(Op::Var, Act::A, std::move(n), nullptr, nullptr, 0, false, h));
}

TermPtr Term::pre(Act a, TermPtr body) {
  uint32_t h = mix(mix(2, static_cast<uint32_t>(a)), body->hash);
  bool cl = body->closed;
  uint32_t sz = 1 + body->size;
  return TermPtr(new Term(Op::Prefix, a, "", std::move(body), nullptr, sz, cl, h));
}

namespace {
TermPtr binary(Op o, TermPtr l, TermPtr r, uint32_t tag) {
  uint32_t h = mix(mix(tag, l->hash), r->hash);
  bool cl = l->closed && r->closed;
  uint32_t sz = 1 + l->size + r->size;
  return std::make_shared<Term>(o, Act::A, "", std::move(l), std::move(r), sz,
                                cl, h);
}
}  // namespace

TermPtr Term::sum(TermPtr l, TermPtr r) { return binary(Op::Sum, l, r, 3); }
TermPtr Term::par(TermPtr l, TermPtr r) { return binary(Op::Par, l, r, 4); }
TermPtr Term::fop(TermPtr l, TermPtr r) { return binary(Op::F, l, r, 5); }

int cmp(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  switch (a->op) {
    case Op::Nil:
      return 0;
    case Op::Var:
      return a->name.compare(b->name);
    case Op::Prefix: {
      if (a->act != b->act) return a->act < b->act ? -1 : 1;
      return cmp(a->left, b->left);
    }
    default: {
      int c = cmp(a->left, b->left);
      if (c != 0) return c;
      return cmp(a->right, b->right);
    }
  }
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->size != b->size) return false;
  return cmp(a, b) == 0;
}

std::vector<TermPtr> summands(const TermPtr& t) {
  std::vector<TermPtr> out;
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
    if (u->op == Op::Sum) {
      walk(u->left);
      walk(u->right);
    } else {
      out.push_back(u);
    }
  };
  walk(t);
  return out;
}

TermPtr sum_of(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return Term::nil();
  TermPtr acc = ts.back();
  for (size_t i = ts.size() - 1; i-- > 0;) acc = Term::sum(ts[i], acc);
  return acc;
}

TermPtr canon(const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      return t;
    case Op::Prefix: {
      TermPtr b = canon(t->left);
      return b.get() == t->left.get() ? t : Term::pre(t->act, b);
    }
    case Op::Par:
    case Op::F: {
      TermPtr l = canon(t->left), r = canon(t->right);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return t->op == Op::Par ? Term::par(l, r) : Term::fop(l, r);
    }
    case Op::Sum: {
      std::vector<TermPtr> parts = summands(t);
      for (auto& p : parts) p = canon(p);
      std::sort(parts.begin(), parts.end(),
                [](const TermPtr& x, const TermPtr& y) { return cmp(x, y) < 0; });
      return sum_of(parts);
    }
  }
  return t;
}

bool ac_equal(const TermPtr& a, const TermPtr& b) {
  return equal(canon(a), canon(b));
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
    switch (u->op) {
      case Op::Var:
        out.insert(u->name);
        break;
      case Op::Prefix:
        walk(u->left);
        break;
      case Op::Sum:
      case Op::Par:
      case Op::F:
        walk(u->left);
        walk(u->right);
        break;
      case Op::Nil:
        break;
    }
  };
  walk(t);
  return out;
}

bool subst_closed(const Subst& s) {
  for (auto& [k, v] : s)
    if (!v->closed) return false;
  return true;
}

bool subst_is_zero(const Subst& s) {
  for (auto& [k, v] : s)
    if (!(v->op == Op::Nil || (v->op == Op::Var && v->name == k))) return false;
  return true;
}

TermPtr apply_subst(const Subst& s, const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
      return t;
    case Op::Var: {
      auto it = s.find(t->name);
      return it == s.end() ? t : it->second;
    }
    case Op::Prefix:
      return Term::pre(t->act, apply_subst(s, t->left));
    case Op::Sum:
      return Term::sum(apply_subst(s, t->left), apply_subst(s, t->right));
    case Op::Par:
      return Term::par(apply_subst(s, t->left), apply_subst(s, t->right));
    case Op::F:
      return Term::fop(apply_subst(s, t->left), apply_subst(s, t->right));
  }
  return t;
}

bool contains_par(const TermPtr& t) {
  switch (t->op) {
    case Op::Par:
      return true;
    case Op::Prefix:
      return contains_par(t->left);
    case Op::Sum:
    case Op::F:
      return contains_par(t->left) || contains_par(t->right);
    default:
      return false;
  }
}

bool contains_f(const TermPtr& t) {
  switch (t->op) {
    case Op::F:
      return true;
    case Op::Prefix:
      return contains_f(t->left);
    case Op::Sum:
    case Op::Par:
      return contains_f(t->left) || contains_f(t->right);
    default:
      return false;
  }
}

namespace {

// level 0: sum context, 1: par operand, 2: prefix body. Nested || is
// always parenthesised so the round trip preserves its association.
void print(const TermPtr& t, int level, std::string& out) {
  switch (t->op) {
    case Op::Nil:
      out += '0';
      return;
    case Op::Var:
      out += t->name;
      return;
    case Op::Prefix: {
      out += act_name(t->act);
      out += '.';
      print(t->left, 2, out);
      return;
    }
    case Op::Par: {
      bool paren = level > 1;
      if (paren) out += '(';
      print(t->left, 2, out);
      out += " || ";
      print(t->right, 2, out);
      if (paren) out += ')';
      return;
    }
    case Op::Sum: {
      bool paren = level > 0;
      if (paren) out += '(';
      bool first = true;
      for (const TermPtr& s : summands(t)) {
        if (!first) out += " + ";
        first = false;
        print(s, 1, out);
      }
      if (paren) out += ')';
      return;
    }
    case Op::F: {
      out += "f(";
      print(t->left, 0, out);
      out += ", ";
      print(t->right, 0, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const TermPtr& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

}  // namespace ccsf
