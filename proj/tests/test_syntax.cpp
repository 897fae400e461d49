#include <doctest.h>

#include <radocert/errors.hpp>
#include <radocert/sampling.hpp>
#include <radocert/syntax.hpp>

using namespace radocert;

TEST_CASE("variables are ordered naturally")
{
  const Domain Z = Domain::integers();
  CHECK(parse_polynomial(Z, "z+y-x").variables == std::vector<std::string>{"x", "y", "z"});
  CHECK(parse_polynomial(Z, "x10+x2-x1").variables == std::vector<std::string>{"x1", "x2", "x10"});
  CHECK(natural_less("x2", "x10"));
  CHECK_FALSE(natural_less("x10", "x2"));
  const NamedPoly p = parse_polynomial(Z, "x-2*y", {"y", "x"});
  CHECK(p.variables == std::vector<std::string>{"y", "x"});
  CHECK(p.poly.coefficient({0, 1}) == Element(Integer(1)));
  CHECK_THROWS_AS(parse_polynomial(Z, "x+w", {"x", "y"}), ParseError);
}

TEST_CASE("grammar")
{
  const Domain Z = Domain::integers();
  CHECK(parse_polynomial(Z, "-x^2 - -y").to_string() == "-x^2+y");
  CHECK(parse_polynomial(Z, "(x+1)^2").to_string() == "x^2+2*x+1");
  CHECK(parse_polynomial(Z, "2 * x * 3").to_string() == "6*x");
  CHECK(parse_polynomial(Z, "x*(y-y)").poly.is_zero());
  CHECK(parse_polynomial(Z, "x - 123456789012345678901234567890").to_string() ==
        "x-123456789012345678901234567890");
}

TEST_CASE("function-field syntax")
{
  const Domain F3 = Domain::poly_over_gf(3);
  const NamedPoly p = parse_polynomial(F3, "x^2 - t*y + 4");
  CHECK(p.variables == std::vector<std::string>{"x", "y"});
  CHECK(p.to_string() == "x^2+2*t*y+1");
  CHECK(F3.format(parse_element(F3, "(t+1)^3")) == "t^3+1");
  const Domain F4 = Domain::poly_over_gf(4);
  const Element e = parse_element(F4, "{2}*t + {3}");
  CHECK(F4.format(e) == "{2}*t+{3}");
  CHECK(parse_element(F4, F4.format(e)) == e);
  CHECK_THROWS_AS(parse_element(F4, "{4}"), ParseError);
}

TEST_CASE("errors carry the offending column")
{
  const Domain Z = Domain::integers();
  try {
    parse_polynomial(Z, "x + * y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(e.annotated() == "x + * y\n    ^ " + e.message());
  }
  CHECK_THROWS_AS(parse_polynomial(Z, "x + (y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(Z, "x / y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(Z, "x^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(Z, "3"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(Z, ""), ParseError);
  CHECK_THROWS_AS(parse_element(Z, "x"), ParseError);
  CHECK_THROWS_AS(parse_element(Z, "t"), ParseError);
  try {
    parse_fraction(Z, "3/ 0x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 3);
  }
}

TEST_CASE("fractions")
{
  const Domain Z = Domain::integers();
  CHECK(parse_fraction(Z, "6/-4") == Z.fraction(Element(Integer(-3)), Element(Integer(2))));
  CHECK(parse_fraction(Z, "5") == Z.embed(Element(Integer(5))));
  CHECK_THROWS(parse_fraction(Z, "1/0"));
  const Domain F2 = Domain::poly_over_gf(2);
  CHECK(F2.format(parse_fraction(F2, "(t^2+t)/t")) == "t+1");
}

TEST_CASE("format and parse round-trip")
{
  for (const Domain& d : {Domain::integers(), Domain::poly_over_gf(2), Domain::poly_over_gf(5),
                          Domain::poly_over_gf(9)}) {
    Sampler s(d, 77);
    for (int i = 0; i < 200; ++i) {
      const MultiPoly p = s.poly(3, 4, 6, 6);
      const auto names = default_variable_names(3);
      const std::string text = format_poly(p, names);
      const NamedPoly back = parse_polynomial(d, text, names);
      CHECK(back.poly == p);
      const Fraction f = s.nonzero_fraction(5);
      CHECK(parse_fraction(d, d.format(f)) == f);
    }
  }
}
