// Regenerates the bundled data files under data/ from the built-in
// catalog. Usage: gen_data <repo-root>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ccsf/catalog.hpp"
#include "ccsf/opspace.hpp"
#include "json.hpp"

using namespace ccsf;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_data <repo-root>\n";
    return 2;
  }
  fs::path root = argv[1];
  fs::create_directories(root / "data" / "axioms");
  fs::create_directories(root / "data" / "rulesets");

  AxiomSystem cat = axiom_catalog();
  auto write_named = [&](const std::string& file,
                         const std::vector<std::string>& names,
                         const std::string& header) {
    std::ofstream out(root / "data" / "axioms" / file);
    out << "# " << header << "\n";
    for (const std::string& n : names)
      for (const Axiom& a : cat.axioms)
        if (a.name == n)
          out << to_string(a.eq.lhs) << " = " << to_string(a.eq.rhs) << "\n";
  };

  write_named("a1-a4.axioms", {"A1", "A2", "A3", "A4"},
              "laws of + : idempotence, commutativity, associativity, unit");
  write_named("f-common.axioms", {"F0"}, "f on two deadlocked arguments");

  nlohmann::json manifest = nlohmann::json::array();
  for (const AxiomGroup& g : axiom_groups()) {
    std::string header = "sound under rule set " + rule_set_to_json(g.rules);
    write_named(g.id + ".axioms", g.axioms, header);
    nlohmann::json j;
    j["id"] = g.id;
    j["file"] = g.id + ".axioms";
    j["rules"] = nlohmann::json::parse(rule_set_to_json(g.rules));
    j["axioms"] = g.axioms;
    manifest.push_back(j);
  }
  std::ofstream(root / "data" / "axioms" / "groups.json")
      << manifest.dump(2) << "\n";

  auto write_rules = [&](const std::string& file, const RuleSet& rs) {
    std::ofstream(root / "data" / "rulesets" / file)
        << rule_set_to_json(rs) << "\n";
  };
  write_rules("labat.json",
              make_rule_set({"a", "a'", "tau"}, {}, {"a/a'"}));
  write_rules("labat-mirror.json",
              make_rule_set({}, {"a", "a'", "tau"}, {"a'/a"}));
  write_rules("lara.json",
              make_rule_set({"a"}, {"a", "a'", "tau"}, {"a/a'"}));
  write_rules("larba-sync.json",
              make_rule_set({"a", "tau"}, {"a'"}, {"a/a'"}));
  write_rules("larba-nosync.json",
              make_rule_set({"a", "tau"}, {"a'"}, {"a'/a"}));
  write_rules("ltau.json", make_rule_set({"tau"}, {"a", "a'"}, {"a/a'"}));
  write_rules("renaming.json", make_rule_set({"a", "a'", "tau"},
                                             {"a", "a'", "tau"},
                                             {"a/a'", "a'/a"}));
  write_rules("hennessy.json",
              make_rule_set({"a", "a'", "tau"}, {}, {"a/a'", "a'/a"}));
  std::cout << "data files written under " << (root / "data") << "\n";
  return 0;
}
