#ifndef CCSF_TERM_HPP
#define CCSF_TERM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccsf {

// The three actions: a, its complement a' and the silent action tau.
enum class Act : uint8_t { A = 0, ABar = 1, Tau = 2 };

constexpr Act kAllActs[3] = {Act::A, Act::ABar, Act::Tau};

inline bool visible(Act a) { return a != Act::Tau; }

// Involution on {a, a'}; undefined for tau.
Act complement_of(Act a);

std::string act_name(Act a);
// Accepts "a", "a'", "tau"; throws std::invalid_argument otherwise.
Act act_from_name(const std::string& s);

enum class Op : uint8_t { Nil = 0, Var = 1, Prefix = 2, Sum = 3, Par = 4, F = 5 };

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable process term. Sub-structure is shared freely; never mutated.
class Term {
 public:
  const Op op;
  const Act act;           // Prefix only
  const std::string name;  // Var only
  const TermPtr left;      // Prefix body lives here
  const TermPtr right;

  // Number of operator symbols. Nil counts as an operator, variables do not;
  // the choice is fixed here and used consistently everywhere.
  const uint32_t size;
  const bool closed;
  const uint32_t hash;  // structural hash, cached at construction

  static TermPtr nil();
  static TermPtr var(std::string n);
  static TermPtr pre(Act a, TermPtr body);
  static TermPtr sum(TermPtr l, TermPtr r);
  static TermPtr par(TermPtr l, TermPtr r);
  static TermPtr fop(TermPtr l, TermPtr r);

  // Use the factories above; direct construction skips no invariants but
  // the cached fields must be consistent.
  Term(Op o, Act a, std::string n, TermPtr l, TermPtr r, uint32_t sz, bool cl,
       uint32_t h);
};

// Total structural order (no AC identification). Returns <0, 0, >0.
int cmp(const TermPtr& a, const TermPtr& b);
bool equal(const TermPtr& a, const TermPtr& b);

// Canonical form: nested sums flattened, summands sorted, rebuilt
// right-nested. Only + is normalised; || and f keep their argument order.
// Duplicate summands are kept (x + x is not the same term as x).
TermPtr canon(const TermPtr& t);

// Structural equality modulo associativity/commutativity of +.
bool ac_equal(const TermPtr& a, const TermPtr& b);

// Flattened summand list (no element has + as head). summands(0) = [0].
std::vector<TermPtr> summands(const TermPtr& t);

// Right-nested sum of the given terms; empty list yields 0.
TermPtr sum_of(const std::vector<TermPtr>& ts);

std::set<std::string> free_vars(const TermPtr& t);

// Finite map from variable names to terms, identity elsewhere.
using Subst = std::map<std::string, TermPtr>;

bool subst_closed(const Subst& s);
// Every non-identity image is 0.
bool subst_is_zero(const Subst& s);

// Homomorphic application; no normalisation of the result.
TermPtr apply_subst(const Subst& s, const TermPtr& t);

bool contains_par(const TermPtr& t);
bool contains_f(const TermPtr& t);

std::string to_string(const TermPtr& t);

}  // namespace ccsf

#endif
