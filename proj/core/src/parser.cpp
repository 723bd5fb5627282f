#include "ccsf/parser.hpp"

#include <cctype>

namespace ccsf {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw ParseError(pos, std::string("expected '") + c + "'");
  }
  bool consume_str(const std::string& kw) {
    skip_ws();
    if (s.compare(pos, kw.size(), kw) == 0) {
      pos += kw.size();
      return true;
    }
    return false;
  }
};

bool ident_char(char c) {
  return std::islower(static_cast<unsigned char>(c)) ||
         std::isdigit(static_cast<unsigned char>(c)) || c == '_';
}

TermPtr parse_sum(Cursor& c);

// Reads a lowercase identifier (may be "a", "tau", "f"; caller decides).
std::string read_word(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && ident_char(c.s[c.pos])) ++c.pos;
  return c.s.substr(start, c.pos - start);
}

TermPtr parse_prefix(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  char ch = c.peek();
  if (ch == '0') {
    ++c.pos;
    return Term::nil();
  }
  if (ch == '(') {
    ++c.pos;
    TermPtr t = parse_sum(c);
    c.expect(')');
    return t;
  }
  if (!std::islower(static_cast<unsigned char>(ch)))
    throw ParseError(c.pos, "expected a term");

  std::string w = read_word(c);
  // action tokens: a, a', tau -- only when followed by '.'
  if (w == "a" && c.pos < c.s.size() && c.s[c.pos] == '\'') {
    ++c.pos;
    c.expect('.');
    return Term::pre(Act::ABar, parse_prefix(c));
  }
  if (w == "a" || w == "tau") {
    c.expect('.');
    return Term::pre(w == "a" ? Act::A : Act::Tau, parse_prefix(c));
  }
  if (w == "f") {
    c.expect('(');
    TermPtr l = parse_sum(c);
    c.expect(',');
    TermPtr r = parse_sum(c);
    c.expect(')');
    return Term::fop(l, r);
  }
  if (w.empty()) throw ParseError(start, "expected a term");
  return Term::var(w);
}

TermPtr parse_par(Cursor& c) {
  TermPtr t = parse_prefix(c);
  while (true) {
    c.skip_ws();
    if (c.s.compare(c.pos, 2, "||") == 0) {
      c.pos += 2;
      t = Term::par(t, parse_prefix(c));
    } else {
      break;
    }
  }
  return t;
}

TermPtr parse_sum(Cursor& c) {
  TermPtr t = parse_par(c);
  while (c.consume('+')) t = Term::sum(t, parse_par(c));
  return t;
}

}  // namespace

TermPtr parse_term(const std::string& input) {
  Cursor c{input};
  TermPtr t = parse_sum(c);
  if (!c.eof()) throw ParseError(c.pos, "trailing input");
  return t;
}

}  // namespace ccsf
