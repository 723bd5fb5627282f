#include "ccsf/openterm.hpp"

#include <algorithm>
#include <functional>

#include "ccsf/lts.hpp"
#include "ccsf/transform.hpp"

namespace ccsf {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::L:
      return "l";
    case Mode::R:
      return "r";
    case Mode::B:
      return "b";
  }
  return "?";
}

ConfigPtr Config::plain(TermPtr t) {
  auto c = std::make_shared<Config>();
  c->kind = Plain;
  c->term = std::move(t);
  return c;
}

ConfigPtr Config::make_dvar(std::string x) {
  auto c = std::make_shared<Config>();
  c->kind = DVar;
  c->dvar = std::move(x);
  return c;
}

ConfigPtr Config::par_left(ConfigPtr sub, TermPtr t) {
  auto c = std::make_shared<Config>();
  c->kind = ParLeft;
  c->sub = std::move(sub);
  c->term = std::move(t);
  return c;
}

ConfigPtr Config::par_right(TermPtr t, ConfigPtr sub) {
  auto c = std::make_shared<Config>();
  c->kind = ParRight;
  c->sub = std::move(sub);
  c->term = std::move(t);
  return c;
}

std::string to_string(const ConfigPtr& c) {
  switch (c->kind) {
    case Config::Plain:
      return to_string(c->term);
    case Config::DVar:
      return c->dvar + "_d";
    case Config::ParLeft:
      return "(" + to_string(c->sub) + ") || " + to_string(c->term);
    case Config::ParRight:
      return to_string(c->term) + " || (" + to_string(c->sub) + ")";
  }
  return "?";
}

TermPtr config_instantiate(const Subst& s, const TermPtr& p, const ConfigPtr& c) {
  switch (c->kind) {
    case Config::Plain:
      return apply_subst(s, c->term);
    case Config::DVar:
      return p;
    case Config::ParLeft:
      return Term::par(config_instantiate(s, p, c->sub), apply_subst(s, c->term));
    case Config::ParRight:
      return Term::par(apply_subst(s, c->term), config_instantiate(s, p, c->sub));
  }
  return p;
}

std::optional<TermPtr> config_context(const ConfigPtr& c) {
  switch (c->kind) {
    case Config::DVar:
      return Term::nil();  // x_d alone: empty context
    case Config::ParLeft: {
      auto inner = config_context(c->sub);
      if (!inner) return std::nullopt;
      return (*inner)->op == Op::Nil ? c->term : Term::par(*inner, c->term);
    }
    case Config::ParRight: {
      auto inner = config_context(c->sub);
      if (!inner) return std::nullopt;
      return (*inner)->op == Op::Nil ? c->term : Term::par(c->term, *inner);
    }
    case Config::Plain:
      return std::nullopt;  // no marker inside
  }
  return std::nullopt;
}

std::vector<std::pair<AuxLabel, ConfigPtr>> aux_step(const RuleSet& rs,
                                                     const TermPtr& t) {
  if (contains_par(t))
    throw std::invalid_argument("aux_step: term contains ||");
  std::vector<std::pair<AuxLabel, ConfigPtr>> out;
  switch (t->op) {
    case Op::Nil:
    case Op::Prefix:
      break;  // prefixes guard their bodies; no auxiliary move
    case Op::Var: {
      for (Act mu : kAllActs) {
        bool l = rs.has_left(mu), r = rs.has_right(mu);
        if (l) out.push_back({{t->name, Mode::L, mu}, Config::make_dvar(t->name)});
        if (r) out.push_back({{t->name, Mode::R, mu}, Config::make_dvar(t->name)});
        if (l && r)
          out.push_back({{t->name, Mode::B, mu}, Config::make_dvar(t->name)});
      }
      break;
    }
    case Op::Sum: {
      for (auto& e : aux_step(rs, t->left)) out.push_back(e);
      for (auto& e : aux_step(rs, t->right)) out.push_back(e);
      break;
    }
    case Op::F: {
      for (auto& [lab, c] : aux_step(rs, t->left))
        if (lab.mode == Mode::L || lab.mode == Mode::B)
          out.push_back({lab, Config::par_left(c, t->right)});
      for (auto& [lab, c] : aux_step(rs, t->right))
        if (lab.mode == Mode::R || lab.mode == Mode::B)
          out.push_back({lab, Config::par_right(t->left, c)});
      break;
    }
    case Op::Par:
      break;  // unreachable, rejected above
  }
  return out;
}

bool trt(const RuleSet& rs, const std::string& x, Mode mode, Act mu,
         const TermPtr& t) {
  switch (t->op) {
    case Op::Nil:
    case Op::Prefix:
      return false;
    case Op::Var: {
      if (t->name != x) return false;
      switch (mode) {
        case Mode::L:
          return rs.has_left(mu);
        case Mode::R:
          return rs.has_right(mu);
        case Mode::B:
          return rs.has_left(mu) && rs.has_right(mu);
      }
      return false;
    }
    case Op::Sum:
      return trt(rs, x, mode, mu, t->left) || trt(rs, x, mode, mu, t->right);
    case Op::F: {
      if (mode == Mode::L) return trt(rs, x, mode, mu, t->left);
      if (mode == Mode::R) return trt(rs, x, mode, mu, t->right);
      return trt(rs, x, mode, mu, t->left) || trt(rs, x, mode, mu, t->right);
    }
    case Op::Par:
      throw std::invalid_argument("trt: term contains ||");
  }
  return false;
}

DecompReport check_o2c(const RuleSet& rs, const TermPtr& t, const Subst& s) {
  DecompReport rep;
  TermPtr inst = apply_subst(s, t);
  auto moves = step(rs, inst);
  auto has_move = [&](Act a, const TermPtr& target) {
    TermPtr c = canon(target);
    for (auto& [b, q] : moves)
      if (a == b && equal(q, c)) return true;
    return false;
  };
  for (auto& [lab, cfg] : aux_step(rs, t)) {
    auto it = s.find(lab.var);
    TermPtr image = it == s.end() ? Term::var(lab.var) : it->second;
    for (auto& [mu, q] : step(rs, image)) {
      if (mu != lab.act) continue;
      ++rep.checked;
      TermPtr target = config_instantiate(s, q, cfg);
      if (!has_move(lab.act, target))
        rep.unexplained.push_back(
            "aux " + lab.var + "_" + mode_name(lab.mode) + " -" +
            act_name(lab.act) + "-> " + to_string(cfg) +
            " not realised for instance move to " + to_string(q));
    }
  }
  return rep;
}

DecompReport check_c2o(const RuleSet& rs, const TermPtr& t, const Subst& s) {
  DecompReport rep;
  TermPtr inst = apply_subst(s, t);
  auto aux = aux_step(rs, t);
  auto term_moves = step_term(rs, t);
  for (auto& [alpha, p] : step(rs, inst)) {
    if (!visible(alpha)) continue;
    ++rep.checked;
    bool explained = false;
    for (auto& [mu, t2] : term_moves) {
      if (mu != alpha) continue;
      if (ac_equal(apply_subst(s, t2), p)) {
        explained = true;
        break;
      }
    }
    if (!explained) {
      bool l = rs.has_left(alpha), r = rs.has_right(alpha);
      Mode want = l && r ? Mode::B : (l ? Mode::L : Mode::R);
      for (auto& [lab, cfg] : aux) {
        if (explained) break;
        if (lab.mode != want || lab.act != alpha) continue;
        auto it = s.find(lab.var);
        if (it == s.end()) continue;
        for (auto& [mu, q] : step(rs, it->second)) {
          if (mu != alpha) continue;
          if (ac_equal(config_instantiate(s, q, cfg), p)) {
            explained = true;
            break;
          }
        }
      }
    }
    if (!explained)
      rep.unexplained.push_back("transition -" + act_name(alpha) + "-> " +
                                to_string(p) + " of " + to_string(inst));
  }
  return rep;
}

TrtDepthReport check_trt_depth(const RuleSet& rs, const TermPtr& t,
                               const Subst& s, const std::string& x) {
  TrtDepthReport rep;
  auto it = s.find(x);
  TermPtr image = it == s.end() ? Term::var(x) : it->second;
  if (!image->closed || !apply_subst(s, t)->closed)
    throw std::invalid_argument("check_trt_depth: instance must be closed");
  std::set<Act> init = initials(rs, image);
  bool pre = nil_clean(t);
  if (pre) {
    bool some_mode = false;
    for (Mode w : {Mode::L, Mode::R, Mode::B}) {
      std::set<Act> covered;
      for (Act mu : kAllActs)
        if (trt(rs, x, w, mu, t)) covered.insert(mu);
      if (covered.empty()) continue;
      if (std::includes(covered.begin(), covered.end(), init.begin(),
                        init.end())) {
        some_mode = true;
        break;
      }
    }
    pre = some_mode;
  }
  rep.pre_holds = pre;
  rep.depth_t = depth(rs, apply_subst(s, t));
  rep.depth_x = depth(rs, image);
  rep.inequality_holds = rep.depth_t >= rep.depth_x;
  return rep;
}

}  // namespace ccsf
