#ifndef RADOCERT_SYNTAX_HPP
#define RADOCERT_SYNTAX_HPP

#include <string>
#include <vector>

#include <radocert/poly.hpp>

namespace radocert {

// A parsed polynomial together with the names of its positional variables.
struct NamedPoly {
  MultiPoly poly;
  std::vector<std::string> variables;

  std::string to_string() const { return format_poly(poly, variables); }
};

// Expression grammar (whitespace ignored):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer | '{' code '}' | identifier | '(' expr ')' | '-' factor
// Over GF(q)[t] the identifier "t" is the ring indeterminate, an integer n is
// n*1, and "{c}" is the F_q element with code c. Any other identifier is a
// variable. Errors carry the 0-based column of the offending token.

// Variables are ordered naturally by name (x2 < x10) unless `variables` is
// given, in which case every identifier must appear in it.
NamedPoly parse_polynomial(const Domain& domain, const std::string& text,
                           const std::vector<std::string>& variables = {});

Element parse_element(const Domain& domain, const std::string& text);
// "a" or "a/b".
Fraction parse_fraction(const Domain& domain, const std::string& text);

// Natural ordering on identifiers: alphabetic prefix, then numeric suffix.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace radocert

#endif
