#include <doctest.h>

#include <radocert/errors.hpp>
#include <radocert/reductions.hpp>
#include <radocert/sampling.hpp>
#include <radocert/syntax.hpp>

#include "oracles.hpp"

using namespace radocert;
using oracle::poly;

namespace {

MultiPoly in_vars(const Domain& d, const std::string& text, const std::vector<std::string>& vars)
{
  return parse_polynomial(d, text, vars).poly;
}

const Domain Z = Domain::integers();

}  // namespace

TEST_CASE("htp_shift examples")
{
  CHECK(htp_shift(poly(Z, "x-5")) == in_vars(Z, "y1+z1-5", {"y1", "z1"}));
  CHECK(htp_shift(poly(Z, "x^2+1")) == in_vars(Z, "(y1+z1)^2+1", {"y1", "z1"}));
  CHECK(htp_shift(poly(Z, "x*y")) == in_vars(Z, "(y1+z1)*(y2+z2)", {"y1", "y2", "z1", "z2"}));
}

TEST_CASE("quotient3_homogenize examples")
{
  const std::vector<std::string> z3{"z1", "z2", "z3"};
  CHECK(quotient3_homogenize(poly(Z, "x^2-2")) == in_vars(Z, "(z1-z2)^2-2*z3^2", z3));
  const std::vector<std::string> z6{"z1", "z2", "z3", "z4", "z5", "z6"};
  CHECK(quotient3_homogenize(poly(Z, "x1*x2-1")) == in_vars(Z, "(z1-z2)*(z4-z5)*z3*z6-z3^2*z6^2", z6));
}

TEST_CASE("diffquotient4_homogenize examples")
{
  const std::vector<std::string> z4{"z1", "z2", "z3", "z4"};
  CHECK(diffquotient4_homogenize(poly(Z, "x^2-2")) == in_vars(Z, "(z1-z2)^2-2*(z3-z4)^2", z4));
  CHECK(diffquotient4_homogenize(poly(Z, "x")) == in_vars(Z, "z1-z2+0*z3+0*z4", z4));
}

TEST_CASE("ratio_gate examples")
{
  const std::vector<std::string> y{"y1", "y2"};
  CHECK(ratio_gate(poly(Z, "x-3"), GateMode::Multiplicative, 0) == in_vars(Z, "y1-3*y2", y));
  CHECK(ratio_gate(poly(Z, "x-3"), GateMode::Additive, 0) == in_vars(Z, "y1-y2-3", y));
  CHECK(ratio_gate(poly(Z, "x^2+x"), GateMode::Multiplicative, 0) == in_vars(Z, "y1^2+y1*y2", y));
  CHECK_THROWS_AS(ratio_gate(poly(Z, "x-3"), GateMode::Multiplicative, 1), PreconditionError);
  // the gate replaces the middle variable in place
  CHECK(ratio_gate(poly(Z, "a+b+c"), GateMode::Additive, 1) ==
        in_vars(Z, "a+y1-y2+c", {"a", "y1", "y2", "c"}));
}

TEST_CASE("partial homogenization keeps unselected variables")
{
  HomogenizeOptions only_second;
  only_second.variables = {1};
  CHECK(quotient3_homogenize(poly(Z, "x+y"), only_second) ==
        in_vars(Z, "x*z3+z1-z2", {"x", "z1", "z2", "z3"}));
}

TEST_CASE("gate then homogenize has the expected shape")
{
  // x - y: gate x multiplicatively, then homogenize the remaining variable y.
  const MultiPoly gated = ratio_gate(poly(Z, "x-y"), GateMode::Multiplicative, 0);
  CHECK(gated == in_vars(Z, "y1-y*y2", {"y1", "y2", "y"}));
  HomogenizeOptions last;
  last.variables = {2};
  const MultiPoly both = quotient3_homogenize(gated, last);
  CHECK(both == in_vars(Z, "y1*z3^2-(z1-z2)*z3*y2", {"y1", "y2", "z1", "z2", "z3"}));
  CHECK(is_homogeneous(both) == 3u);
}

TEST_CASE("structural claims hold on random inputs")
{
  for (const Domain& d : {Domain::integers(), Domain::poly_over_gf(3)}) {
    Sampler s(d, 55);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t k = 1 + trial % 3;
      const unsigned deg = 1 + trial % 3;
      const MultiPoly p = s.poly(k, deg, 5, 5);
      const MultiPoly q3 = quotient3_homogenize(p);
      CHECK(is_homogeneous(q3) == static_cast<unsigned>(k * deg));
      const MultiPoly dq4 = diffquotient4_homogenize(p);
      CHECK(is_homogeneous(dq4).has_value());
      CHECK(is_translation_invariant(dq4));
      const MultiPoly shift = htp_shift(p);
      CHECK(shift.nvars() == 2 * k);
      for (const Transform t : {Transform::Shift, Transform::Quotient3, Transform::DiffQuotient4,
                                Transform::GateMul, Transform::GateAdd}) {
        const ReductionReport r = reduce(p, t, 0, 8);
        CHECK(r.identity_checked);
        CHECK(r.identity_samples == 8);
      }
    }
  }
}

TEST_CASE("planted roots lift through quotient3_homogenize")
{
  for (const Domain& d : {Domain::integers(), Domain::poly_over_gf(5)}) {
    Sampler s(d, 66);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t k = 1 + trial % 3;
      const MultiPoly q = s.poly(k, 1 + trial % 3, 4, 4);
      std::vector<Fraction> root;
      for (std::size_t i = 0; i < k; ++i) root.push_back(s.nonzero_fraction(4));
      // p = den*q - num has `root` as a root
      const Fraction v = q.eval(std::span<const Fraction>(root));
      const MultiPoly p = q.scaled(v.den) - MultiPoly::constant(d, k, v.num);
      REQUIRE(d.is_zero(p.eval(std::span<const Fraction>(root))));
      const MultiPoly out = quotient3_homogenize(p);
      std::vector<Fraction> z;
      for (std::size_t i = 0; i < k; ++i) {
        const Fraction scale = s.nonzero_fraction(4), offset = s.nonzero_fraction(4);
        z.push_back(d.add(d.mul(root[i], scale), offset));
        z.push_back(offset);
        z.push_back(scale);
      }
      CHECK(d.is_zero(out.eval(std::span<const Fraction>(z))));
    }
  }
}

TEST_CASE("the defining identity detects a wrong output")
{
  const MultiPoly p = poly(Z, "x^2-2");
  const MultiPoly wrong = in_vars(Z, "(z1-z2)^2-3*z3^2", {"z1", "z2", "z3"});
  const std::vector<Fraction> pt{Z.embed(Element(Integer(5))), Z.embed(Element(Integer(2))),
                                 Z.embed(Element(Integer(7)))};
  CHECK(check_identity(p, quotient3_homogenize(p), Transform::Quotient3, 0, pt) == true);
  CHECK(check_identity(p, wrong, Transform::Quotient3, 0, pt) == false);
  const std::vector<Fraction> singular{Z.embed(Element(Integer(5))), Z.embed(Element(Integer(2))), Z.embed(Z.zero())};
  CHECK_FALSE(check_identity(p, quotient3_homogenize(p), Transform::Quotient3, 0, singular).has_value());
}

TEST_CASE("transform ids and output names")
{
  for (const auto& id : {"shift", "q3", "dq4", "gate:mul", "gate:add"}) CHECK(to_string(parse_transform(id)) == id);
  CHECK_THROWS_AS(parse_transform("q5"), PreconditionError);
  const std::vector<std::string> in{"x", "y"};
  CHECK(output_variable_names(Transform::Shift, in) == std::vector<std::string>{"y1", "y2", "z1", "z2"});
  CHECK(output_variable_names(Transform::GateMul, in, 1) == std::vector<std::string>{"x", "y1", "y2"});
  CHECK(output_variable_names(Transform::Quotient3, in).size() == 6);
}

TEST_CASE("clearing exponent below the degree is rejected")
{
  HomogenizeOptions low;
  low.clearing_exponent = 1;
  CHECK_THROWS_AS(quotient3_homogenize(poly(Z, "x^2-2"), low), PreconditionError);
  HomogenizeOptions high;
  high.clearing_exponent = 3;
  CHECK(is_homogeneous(quotient3_homogenize(poly(Z, "x^2-2"), high)) == 3u);
}
