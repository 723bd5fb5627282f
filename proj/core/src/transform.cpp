#include "ccsf/transform.hpp"

namespace ccsf {

TermPtr par_to_f(const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      return t;
    case Op::Prefix: {
      TermPtr b = par_to_f(t->left);
      return b.get() == t->left.get() ? t : Term::pre(t->act, b);
    }
    case Op::Sum: {
      TermPtr l = par_to_f(t->left), r = par_to_f(t->right);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return Term::sum(l, r);
    }
    case Op::F: {
      TermPtr l = par_to_f(t->left), r = par_to_f(t->right);
      if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
      return Term::fop(l, r);
    }
    case Op::Par: {
      TermPtr l = par_to_f(t->left), r = par_to_f(t->right);
      return Term::sum(Term::fop(l, r), Term::fop(r, l));
    }
  }
  return t;
}

bool nil_class(const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
      return true;
    case Op::Sum:
      return nil_class(t->left) && nil_class(t->right);
    case Op::F:
      return nil_class(t->left);
    default:
      return false;
  }
}

TermPtr strip_nil(const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      return t;
    case Op::Prefix:
      return Term::pre(t->act, strip_nil(t->left));
    case Op::Sum: {
      if (nil_class(t->left)) return strip_nil(t->right);
      if (nil_class(t->right)) return strip_nil(t->left);
      return Term::sum(strip_nil(t->left), strip_nil(t->right));
    }
    case Op::F: {
      if (nil_class(t->left)) return Term::nil();
      if (nil_class(t->right)) return strip_nil(t->left);
      return Term::fop(strip_nil(t->left), strip_nil(t->right));
    }
    case Op::Par:
      throw std::invalid_argument("strip_nil: term contains ||");
  }
  return t;
}

bool nil_clean(const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Var:
      return true;
    case Op::Prefix:
      return nil_clean(t->left);
    case Op::Sum:
      return !nil_class(t->left) && !nil_class(t->right) &&
             nil_clean(t->left) && nil_clean(t->right);
    case Op::F:
      return !nil_class(t->left) && !nil_class(t->right) &&
             nil_clean(t->left) && nil_clean(t->right);
    case Op::Par:
      return nil_clean(t->left) && nil_clean(t->right);
  }
  return true;
}

}  // namespace ccsf
