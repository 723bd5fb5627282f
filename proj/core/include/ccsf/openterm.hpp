#ifndef CCSF_OPENTERM_HPP
#define CCSF_OPENTERM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccsf/ruleset.hpp"
#include "ccsf/term.hpp"

namespace ccsf {

// Execution mode of a variable occurrence: which of the f rules lets the
// closed instance move. L needs the left rule, R the right rule, B both.
enum class Mode { L, R, B };
std::string mode_name(Mode m);

struct AuxLabel {
  std::string var;
  Mode mode;
  Act act;
};

// Open-term execution state: a ||-context around a single started-variable
// marker x_d, or a plain term.
struct Config;
using ConfigPtr = std::shared_ptr<const Config>;
struct Config {
  enum Kind { Plain, DVar, ParLeft, ParRight } kind;
  TermPtr term;      // Plain, and the plain side of ParLeft/ParRight
  std::string dvar;  // DVar
  ConfigPtr sub;     // ParLeft/ParRight

  static ConfigPtr plain(TermPtr t);
  static ConfigPtr make_dvar(std::string x);
  static ConfigPtr par_left(ConfigPtr c, TermPtr t);   // c || t
  static ConfigPtr par_right(TermPtr t, ConfigPtr c);  // t || c
};

std::string to_string(const ConfigPtr& c);

// Replaces the x_d marker by p and applies s elsewhere.
TermPtr config_instantiate(const Subst& s, const TermPtr& p,
                           const ConfigPtr& c);

// The ||-context product around the marker: for c = x_d || t1 || ... the
// product of the non-marker sides. Every auxiliary target has this shape.
std::optional<TermPtr> config_context(const ConfigPtr& c);

// Auxiliary transition relation over ||-free terms: which variable, in
// which mode, can contribute which initial action, and into which
// configuration. Throws std::invalid_argument on terms containing ||.
std::vector<std::pair<AuxLabel, ConfigPtr>> aux_step(const RuleSet& rs,
                                                     const TermPtr& t);

// Unguarded-occurrence relation: x can contribute an initial mu-move of
// any closed instance of t through the rules available in the given mode.
bool trt(const RuleSet& rs, const std::string& x, Mode mode, Act mu,
         const TermPtr& t);

struct DecompReport {
  long checked = 0;
  std::vector<std::string> unexplained;  // empty when the property holds
};

// Open-to-closed direction: every auxiliary transition of t combined with
// a matching move of s(x) yields a real transition of s(t).
DecompReport check_o2c(const RuleSet& rs, const TermPtr& t, const Subst& s);

// Closed-to-open direction, visible actions only: every visible move of
// s(t) is explained by a term transition of t or by an auxiliary
// transition plus a move of some s(x), with the mode fixed by which rules
// exist for the action.
DecompReport check_c2o(const RuleSet& rs, const TermPtr& t, const Subst& s);

struct TrtDepthReport {
  bool pre_holds = false;      // x unguarded and init(s(x)) within its modes
  bool inequality_holds = false;
  int depth_t = 0;
  int depth_x = 0;
};

// depth(s(t)) >= depth(s(x)) whenever t is nil-clean, x can initiate moves
// in some mode w, and every initial action of s(x) is covered by that mode.
TrtDepthReport check_trt_depth(const RuleSet& rs, const TermPtr& t,
                               const Subst& s, const std::string& x);

}  // namespace ccsf

#endif
