#include "ccsf/opspace.hpp"

#include <stdexcept>

namespace ccsf {

std::string dist_name(DistClass d) {
  switch (d) {
    case DistClass::First:
      return "first";
    case DistClass::Second:
      return "second";
    case DistClass::Neither:
      return "neither";
  }
  return "?";
}

std::string family_name(const Family f) {
  switch (f) {
    case Family::RenamingOfPar:
      return "renaming-of-par";
    case Family::HennessyMerge:
      return "hennessy-merge";
    case Family::AllLeft:
      return "all-left";
    case Family::BothSides:
      return "both-sides";
    case Family::OpposedSync:
      return "opposed-sync";
    case Family::OpposedNoSync:
      return "opposed-nosync";
    case Family::TauOpposite:
      return "tau-opposite";
    case Family::Unassigned:
      return "unassigned";
  }
  return "?";
}

std::vector<RuleSet> enumerate_admissible() {
  std::vector<RuleSet> out;
  out.reserve(81);
  // 0 = left only, 1 = right only, 2 = both
  for (int fa = 0; fa < 3; ++fa)
    for (int fb = 0; fb < 3; ++fb)
      for (int ft = 0; ft < 3; ++ft)
        for (int sync = 0; sync < 3; ++sync) {
          RuleSet rs;
          auto flag = [&](Act act, int mode) {
            if (mode == 0 || mode == 2) rs.set_left(act);
            if (mode == 1 || mode == 2) rs.set_right(act);
          };
          flag(Act::A, fa);
          flag(Act::ABar, fb);
          flag(Act::Tau, ft);
          rs.sync_a = sync == 0 || sync == 2;
          rs.sync_b = sync == 1 || sync == 2;
          out.push_back(rs);
        }
  return out;
}

long admissible_count_formula(int pairs) {
  long r = 3;  // the sync choices per complementary pair multiply in
  for (int i = 0; i < 3 * pairs; ++i) r *= 3;
  return r;
}

DistClass classify_distributivity(const RuleSet& rs) {
  if (rs.right == 0) return DistClass::First;
  if (rs.left == 0) return DistClass::Second;
  return DistClass::Neither;
}

OperatorClass dispatch(const RuleSet& rs) {
  Validation v = validate(rs);
  if (!v.ok) throw std::invalid_argument("dispatch: rule set is not admissible");

  OperatorClass oc;
  oc.dist = classify_distributivity(rs);
  bool both_syncs = rs.sync_a && rs.sync_b;
  uint8_t all = (1u << 0) | (1u << 1) | (1u << 2);

  if (rs.left == all && rs.right == all && both_syncs) {
    oc.family = Family::RenamingOfPar;
    return oc;
  }

  if (oc.dist == DistClass::First) {
    oc.family = both_syncs ? Family::HennessyMerge : Family::AllLeft;
    // single sync: the rule's first premise action points at alpha
    oc.alpha = rs.sync_a ? Act::A : Act::ABar;
    return oc;
  }
  if (oc.dist == DistClass::Second) {
    oc.family = both_syncs ? Family::HennessyMerge : Family::AllLeft;
    oc.mirrored = true;
    // transposing the operator swaps the sync orientation
    oc.alpha = rs.sync_a ? Act::ABar : Act::A;
    return oc;
  }

  // not distributive in either argument
  auto two_sided = [&](Act a) { return rs.has_left(a) && rs.has_right(a); };
  if (two_sided(Act::A) || two_sided(Act::ABar)) {
    oc.family = Family::BothSides;
    oc.alpha = two_sided(Act::A) ? Act::A : Act::ABar;
    return oc;
  }

  bool a_left = rs.has_left(Act::A);
  bool b_left = rs.has_left(Act::ABar);
  if (a_left != b_left) {
    // one visible action left-only, the other right-only
    oc.alpha = a_left ? Act::A : Act::ABar;
    bool sync_matches = oc.alpha == Act::A ? rs.sync_a : rs.sync_b;
    oc.family = sync_matches ? Family::OpposedSync : Family::OpposedNoSync;
    return oc;
  }

  // both visible actions on the same side; non-distributivity forces tau
  // onto the other side (possibly on both)
  if (!a_left && rs.has_left(Act::Tau)) {
    oc.family = Family::TauOpposite;
    oc.alpha = Act::A;
    return oc;
  }
  if (a_left && rs.has_right(Act::Tau)) {
    oc.family = Family::TauOpposite;
    oc.alpha = Act::A;
    oc.mirrored = true;
    return oc;
  }

  oc.family = Family::Unassigned;
  oc.diagnostic = "no case clause fired for " + rule_set_to_json(rs);
  return oc;
}

}  // namespace ccsf
