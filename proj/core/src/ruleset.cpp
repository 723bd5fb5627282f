#include "ccsf/ruleset.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ccsf {

Validation validate(const RuleSet& rs) {
  Validation v;
  for (Act a : kAllActs) {
    if (!rs.has_left(a) && !rs.has_right(a)) {
      v.ok = false;
      v.violations.push_back("action " + act_name(a) + " has no rule");
    }
  }
  if (!rs.sync_a && !rs.sync_b) {
    v.ok = false;
    v.violations.push_back("no sync rule");
  }
  return v;
}

RuleSet make_rule_set(const std::vector<std::string>& left,
                      const std::vector<std::string>& right,
                      const std::vector<std::string>& sync) {
  RuleSet rs;
  for (const auto& s : left) rs.set_left(act_from_name(s));
  for (const auto& s : right) rs.set_right(act_from_name(s));
  for (const auto& s : sync) {
    if (s == "a/a'")
      rs.sync_a = true;
    else if (s == "a'/a")
      rs.sync_b = true;
    else
      throw std::invalid_argument("unknown sync flag '" + s + "'");
  }
  return rs;
}

RuleSet rule_set_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("rule set: expected object");
  for (auto& [key, val] : j.items()) {
    if (key != "left" && key != "right" && key != "sync")
      throw std::invalid_argument("rule set: unknown key '" + key + "'");
  }
  auto list = [&](const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array())
      throw std::invalid_argument(std::string("rule set: '") + key +
                                  "' must be an array");
    for (auto& e : j[key]) out.push_back(e.get<std::string>());
    return out;
  };
  return make_rule_set(list("left"), list("right"), list("sync"));
}

std::string rule_set_to_json(const RuleSet& rs) {
  nlohmann::json j;
  auto names = [&](bool is_left) {
    nlohmann::json arr = nlohmann::json::array();
    for (Act a : kAllActs)
      if (is_left ? rs.has_left(a) : rs.has_right(a)) arr.push_back(act_name(a));
    return arr;
  };
  j["left"] = names(true);
  j["right"] = names(false);
  nlohmann::json sync = nlohmann::json::array();
  if (rs.sync_a) sync.push_back("a/a'");
  if (rs.sync_b) sync.push_back("a'/a");
  j["sync"] = sync;
  return j.dump();
}

RuleSet load_rule_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule set file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return rule_set_from_json(ss.str());
}

RuleSet mirror(const RuleSet& rs) {
  RuleSet m;
  m.left = rs.right;
  m.right = rs.left;
  m.sync_a = rs.sync_b;
  m.sync_b = rs.sync_a;
  return m;
}

RuleSet rename_actions(const RuleSet& rs) {
  auto swap_bits = [](uint8_t mask) {
    uint8_t a = (mask >> static_cast<int>(Act::A)) & 1;
    uint8_t b = (mask >> static_cast<int>(Act::ABar)) & 1;
    uint8_t tau = (mask >> static_cast<int>(Act::Tau)) & 1;
    return static_cast<uint8_t>((b << static_cast<int>(Act::A)) |
                                (a << static_cast<int>(Act::ABar)) |
                                (tau << static_cast<int>(Act::Tau)));
  };
  RuleSet r;
  r.left = swap_bits(rs.left);
  r.right = swap_bits(rs.right);
  r.sync_a = rs.sync_b;
  r.sync_b = rs.sync_a;
  return r;
}

}  // namespace ccsf
