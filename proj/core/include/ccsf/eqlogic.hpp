#ifndef CCSF_EQLOGIC_HPP
#define CCSF_EQLOGIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccsf/ruleset.hpp"
#include "ccsf/term.hpp"
#include "ccsf/trees.hpp"

namespace ccsf {

struct Equation {
  TermPtr lhs, rhs;
};

bool eq_ac_equal(const Equation& a, const Equation& b);

struct Axiom {
  std::string name;
  Equation eq;
};

struct AxiomSystem {
  std::string name;
  std::vector<Axiom> axioms;

  // Index of an axiom equal to eq modulo AC and variable renaming, or -1.
  int find(const Equation& eq) const;
  bool contains(const Equation& eq) const { return find(eq) >= 0; }
};

// For each axiom t ~ u the system also contains u ~ t.
bool symmetry_closed(const AxiomSystem& e);
AxiomSystem symmetry_close(const AxiomSystem& e);

// Closure under zero-instantiation: adds s(t)/0 ~ s(u)/0 for every
// substitution s mapping some variables to 0 and the rest to themselves.
// Axioms must be ||-free. Finite and idempotent.
AxiomSystem saturate(const AxiomSystem& e);
bool is_saturated(const AxiomSystem& e);

// Plain-text axiom files: one "lhs = rhs" per line, '#' comments.
AxiomSystem parse_axioms(const std::string& text, const std::string& name);
AxiomSystem load_axioms(const std::string& path);
std::string axioms_to_text(const AxiomSystem& e);

// ---- proofs ----------------------------------------------------------

enum class PRule {
  AxiomInst,   // substitution instance of an axiom
  Refl,        // t ~ t
  Sym,         // from child u ~ t conclude t ~ u
  Trans,       // children t ~ u and u ~ v
  CongPrefix,  // from t ~ u conclude mu.t ~ mu.u
  CongSum,     // two children, conclusion joins with +
  CongF,       // two children, conclusion joins with f
  CongPar,     // two children, conclusion joins with ||
};

std::string prule_name(PRule r);

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

struct Proof {
  PRule rule;
  Equation concl;
  int axiom = -1;  // AxiomInst
  Subst subst;     // AxiomInst
  Act act{};       // CongPrefix
  ProofPtr a, b;

  static ProofPtr axiom_inst(const AxiomSystem& e, int idx, Subst s);
  static ProofPtr refl(TermPtr t);
  static ProofPtr sym(ProofPtr child);
  static ProofPtr trans(ProofPtr x, ProofPtr y);
  static ProofPtr cong_prefix(Act mu, ProofPtr child);
  static ProofPtr cong_sum(ProofPtr x, ProofPtr y);
  static ProofPtr cong_f(ProofPtr x, ProofPtr y);
  static ProofPtr cong_par(ProofPtr x, ProofPtr y);
};

struct CheckResult {
  bool ok = true;
  std::string node;     // path of the first invalid node, e.g. "root.1.2"
  std::string message;  // violated rule
};

// Validates every node; equations are compared modulo AC of +.
CheckResult check_proof(const AxiomSystem& e, const ProofPtr& pr);

size_t proof_nodes(const ProofPtr& pr);

// ---- soundness -------------------------------------------------------

struct SoundVerdict {
  bool refuted = false;
  Subst counterexample;  // set when refuted
  long combinations = 0;
};

// Substitutes every combination of enumerator trees for the variables of
// eq and compares behaviours. A pass is only a bounded claim; a refutation
// is definite.
SoundVerdict sound(const RuleSet& rs, const Equation& eq,
                   const SyncTreeEnumerator& en);

struct AxiomVerdict {
  std::string name;
  SoundVerdict verdict;
};

std::vector<AxiomVerdict> sound_axioms(const RuleSet& rs, const AxiomSystem& e,
                                       const SyncTreeEnumerator& en);

// ---- standard axioms and helper proofs --------------------------------

// x+x~x, x+y~y+x, (x+y)+z~x+(y+z), x+0~x, f(0,0)~0, f(0,x)~0, f(x,0)~x.
AxiomSystem standard_axioms();

// True when e contains (modulo AC and renaming) all of standard_axioms().
bool has_standard_axioms(const AxiomSystem& e);

// Proof of t ~ strip_nil(t) from the standard axioms inside e.
// Requires has_standard_axioms(e) and ||-free t.
ProofPtr strip_nil_proof(const AxiomSystem& e, const TermPtr& t);

// Proof of t ~ u where both sides have the same canonical form after
// deduplicating summands; uses only the idempotence axiom x+x~x from e.
ProofPtr dedup_proof(const AxiomSystem& e, const TermPtr& t, const TermPtr& u);

// ---- ||-elimination lifting -------------------------------------------

// Image of an axiom system under par_to_f.
AxiomSystem par_to_f_system(const AxiomSystem& e);

// Lifts a proof over e to a proof over par_to_f_system(e): every term is
// replaced by its ||-free form and every CongPar node is replaced by the
// sum-of-two-f congruence. The axiom indices are preserved.
ProofPtr par_to_f_proof(const ProofPtr& pr);

}  // namespace ccsf

#endif
