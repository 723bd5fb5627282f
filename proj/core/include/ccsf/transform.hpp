#ifndef CCSF_TRANSFORM_HPP
#define CCSF_TRANSFORM_HPP

#include "ccsf/term.hpp"

namespace ccsf {

// Rewrites every t || u into f(t,u) + f(u,t), recursively. The result is
// free of ||; terms already free of || come back unchanged.
TermPtr par_to_f(const TermPtr& t);

// Syntactic class of terms that are bisimilar to 0 under every closed
// substitution: 0, sums of such terms, and f(t, u) with t in the class.
// Variables are not in the class.
bool nil_class(const TermPtr& t);

// Removes every occurrence of 0 as a summand or as an f-argument ("factor").
// Defined for ||-free terms only; throws std::invalid_argument otherwise.
// The "is this subterm equivalent to 0" test is the syntactic nil_class
// above, which agrees with the semantic test on closed terms.
TermPtr strip_nil(const TermPtr& t);

// True when t has no 0 summand and no f-argument in nil_class.
bool nil_clean(const TermPtr& t);

}  // namespace ccsf

#endif
