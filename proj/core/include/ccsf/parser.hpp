#ifndef CCSF_PARSER_HPP
#define CCSF_PARSER_HPP

#include <stdexcept>
#include <string>

#include "ccsf/term.hpp"

namespace ccsf {

// Syntax error with the byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t pos, const std::string& what)
      : std::runtime_error("at offset " + std::to_string(pos) + ": " + what),
        position(pos) {}
  const size_t position;
};

// Grammar (whitespace insignificant, '.' binds tighter than '||' than '+'):
//   term   := sum
//   sum    := par ('+' par)*
//   par    := prefix ('||' prefix)*
//   prefix := action '.' prefix | atom
//   atom   := '0' | ident | 'f' '(' term ',' term ')' | '(' term ')'
//   action := 'a' | "a'" | 'tau'
//   ident  := lowercase identifier not in {a, tau, f}
TermPtr parse_term(const std::string& input);

}  // namespace ccsf

#endif
