#include <doctest.h>

#include <random>
#include <set>

#include <radocert/errors.hpp>
#include <radocert/ring.hpp>
#include <radocert/sampling.hpp>
#include <radocert/syntax.hpp>

#include "oracles.hpp"

using namespace radocert;
using oracle::z;

namespace {

Element gf(const Domain& d, const std::string& text) { return parse_element(d, text); }

std::string int128_text(__int128 v)
{
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string s;
  for (; v != 0; v /= 10) s.insert(s.begin(), char('0' + (negative ? -(v % 10) : v % 10)));
  return negative ? "-" + s : s;
}

}  // namespace

TEST_CASE("enumeration examples")
{
  const Domain Z = Domain::integers();
  CHECK(Z.enumerate(0) == z(0));
  CHECK(Z.enumerate(1) == z(1));
  CHECK(Z.enumerate(2) == z(-1));
  CHECK(Z.enumerate(5) == z(3));
  const Domain F2 = Domain::poly_over_gf(2);
  CHECK(F2.format(F2.enumerate(5)) == "t^2+1");
  CHECK(F2.is_zero(F2.enumerate(0)));
}

TEST_CASE("enumeration is injective and inverted by index_of")
{
  for (const Domain& d : {Domain::integers(), Domain::poly_over_gf(2), Domain::poly_over_gf(3),
                          Domain::poly_over_gf(4)}) {
    std::set<std::string> seen;
    for (int i = 0; i < 10000; ++i) {
      const Element e = d.enumerate(i);
      CHECK(d.index_of(e) == i);
      seen.insert(d.format(e));
    }
    CHECK(seen.size() == 10000);
  }
}

TEST_CASE("enumeration order agrees with element order")
{
  const Domain d = Domain::poly_over_gf(3);
  for (int i = 1; i < 500; ++i) CHECK(d.enumerate(i - 1) < d.enumerate(i));
}

TEST_CASE("arithmetic examples")
{
  const Domain Z = Domain::integers();
  CHECK(Z.arith(ArithOp::Mul, z(-3), z(7)) == z(-21));
  const Domain F2 = Domain::poly_over_gf(2);
  CHECK(F2.arith(ArithOp::Add, gf(F2, "t+1"), gf(F2, "t")) == F2.one());
  const Domain F3 = Domain::poly_over_gf(3);
  CHECK(F3.arith(ArithOp::Mul, gf(F3, "t+1"), gf(F3, "t+2")) == gf(F3, "t^2+2"));
  CHECK(F3.arith(ArithOp::ExactDiv, gf(F3, "t^2+2"), gf(F3, "t+1")) == gf(F3, "t+2"));
}

TEST_CASE("exact division rejects non-divisors and zero")
{
  const Domain Z = Domain::integers();
  CHECK(Z.exact_div(z(21), z(-7)) == z(-3));
  CHECK_THROWS_AS(Z.exact_div(z(7), z(2)), DivisibilityError);
  CHECK_THROWS_AS(Z.exact_div(z(7), z(0)), DivisibilityError);
  const Domain F2 = Domain::poly_over_gf(2);
  CHECK_THROWS_AS(F2.exact_div(gf(F2, "t^2+1"), gf(F2, "t")), DivisibilityError);
}

TEST_CASE("integer arithmetic agrees with native arithmetic")
{
  const Domain Z = Domain::integers();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-(1LL << 40), 1LL << 40);
  for (int i = 0; i < 1000; ++i) {
    const long long a = dist(rng), b = dist(rng);
    CHECK(Z.add(z(a), z(b)) == z(a + b));
    CHECK(Z.sub(z(a), z(b)) == z(a - b));
    CHECK(Z.format(Z.mul(z(a), z(b))) == int128_text(static_cast<__int128>(a) * b));
    if (b != 0) CHECK(Z.exact_div(Z.mul(z(a), z(b)), z(b)) == z(a));
  }
}

TEST_CASE("F_p[t] arithmetic agrees with schoolbook arithmetic")
{
  for (long long p : {2LL, 3LL, 5LL, 7LL}) {
    const Domain d = Domain::poly_over_gf(static_cast<std::uint64_t>(p));
    Sampler s(d, 11);
    for (int i = 0; i < 1000; ++i) {
      const Element a = s.element(6), b = s.element(6);
      CHECK(oracle::codes(d.add(a, b)) == oracle::gf_add(oracle::codes(a), oracle::codes(b), p));
      CHECK(oracle::codes(d.mul(a, b)) == oracle::gf_mul(oracle::codes(a), oracle::codes(b), p));
      CHECK(d.add(d.sub(a, b), b) == a);
      if (!d.is_zero(b)) {
        CHECK(d.exact_div(d.mul(a, b), b) == a);
        const auto [quot, rem] = d.divmod(a, b);
        CHECK(d.add(d.mul(quot, b), rem) == a);
        CHECK((d.is_zero(rem) || rem.gf().degree() < b.gf().degree()));
      }
    }
  }
}

TEST_CASE("extension field coefficients")
{
  const FiniteField f4(4);
  CHECK(f4.characteristic() == 2);
  CHECK(f4.degree() == 2);
  for (FiniteField::Code a = 1; a < 4; ++a) CHECK(f4.mul(a, f4.inv(a)) == 1);
  for (FiniteField::Code a = 0; a < 4; ++a)
    for (FiniteField::Code b = 0; b < 4; ++b)
      for (FiniteField::Code c = 0; c < 4; ++c)
        CHECK(f4.mul(a, f4.add(b, c)) == f4.add(f4.mul(a, b), f4.mul(a, c)));
  CHECK_THROWS_AS(f4.inv(0), DivisibilityError);

  const Domain d = Domain::poly_over_gf(9);
  Sampler s(d, 3);
  for (int i = 0; i < 200; ++i) {
    const Element a = s.element(4), b = s.nonzero_element(4);
    CHECK(d.exact_div(d.mul(a, b), b) == a);
  }
}

TEST_CASE("fraction normalization examples")
{
  const Domain Z = Domain::integers();
  CHECK(Z.fraction(z(6), z(-4)) == Fraction{z(-3), z(2)});
  CHECK(Z.fraction(z(0), z(5)) == Fraction{z(0), z(1)});
  CHECK(Z.format(Z.fraction(z(6), z(-4))) == "-3/2");
  CHECK_THROWS(Z.fraction(z(1), z(0)));
  const Domain F2 = Domain::poly_over_gf(2);
  CHECK(F2.fraction(gf(F2, "t^2+t"), gf(F2, "t")) == F2.embed(gf(F2, "t+1")));
  const Domain F3 = Domain::poly_over_gf(3);
  const Fraction f = F3.fraction(gf(F3, "t"), gf(F3, "2*t+2"));
  CHECK(f.den == gf(F3, "t+1"));
  CHECK(f.num == gf(F3, "2*t"));
}

TEST_CASE("fraction normalization is idempotent; multiplication is commutative and associative")
{
  for (const Domain& d : {Domain::integers(), Domain::poly_over_gf(3), Domain::poly_over_gf(2)}) {
    Sampler s(d, 5);
    for (int i = 0; i < 1000; ++i) {
      const Fraction a = s.nonzero_fraction(d.is_integers() ? 50 : 4);
      const Fraction b = s.nonzero_fraction(d.is_integers() ? 50 : 4);
      const Fraction c = s.nonzero_fraction(d.is_integers() ? 50 : 4);
      CHECK(d.fraction(a.num, a.den) == a);
      CHECK(d.mul(a, b) == d.mul(b, a));
      CHECK(d.mul(d.mul(a, b), c) == d.mul(a, d.mul(b, c)));
      CHECK(d.mul(a, d.inv(a)) == d.embed(d.one()));
      CHECK(d.sub(d.add(a, b), b) == a);
    }
  }
}

TEST_CASE("ord examples")
{
  const Domain Z = Domain::integers();
  CHECK(Z.ord_at(z(12), z(2)).order == 2);
  CHECK_FALSE(Z.ord_at(z(12), z(2)).degenerate);
  CHECK(Z.ord_at(z(-45), z(3)).order == 2);
  const Valuation zero = Z.ord_at(z(0), z(3));
  CHECK(zero.order == 0);
  CHECK(zero.degenerate);
  CHECK_THROWS_AS(Z.ord_at(z(12), z(4)), PreconditionError);
  CHECK_THROWS_AS(Z.ord_at(z(12), z(1)), PreconditionError);

  const Domain F2 = Domain::poly_over_gf(2);
  CHECK(F2.ord_at(gf(F2, "t^3+t^2"), gf(F2, "t")).order == 2);
  CHECK(F2.ord_at(gf(F2, "t^3+t^2"), gf(F2, "t+1")).order == 1);
  CHECK_THROWS_AS(F2.ord_at(gf(F2, "t"), gf(F2, "t^2+1")), PreconditionError);
}

TEST_CASE("irreducibility")
{
  const Domain Z = Domain::integers();
  for (int n = 2; n < 200; ++n) {
    bool prime = true;
    for (int k = 2; k * k <= n; ++k) prime = prime && n % k != 0;
    CHECK(Z.is_irreducible(z(n)) == prime);
    CHECK(Z.is_irreducible(z(-n)) == prime);
  }
  CHECK(Z.is_irreducible(Element(Integer("170141183460469231731687303715884105727"))));  // 2^127 - 1
  const Domain F2 = Domain::poly_over_gf(2);
  CHECK(F2.is_irreducible(gf(F2, "t^2+t+1")));
  CHECK_FALSE(F2.is_irreducible(gf(F2, "t^2+1")));
  CHECK(F2.is_irreducible(gf(F2, "t^4+t+1")));
  CHECK_FALSE(F2.is_irreducible(gf(F2, "t^4+t^2+1")));  // (t^2+t+1)^2
  // count irreducible monic polynomials of degree 4 over F_3: (3^4 - 3^2)/4 = 18
  const Domain F3 = Domain::poly_over_gf(3);
  int count = 0;
  for (int i = 81; i < 162; ++i) count += F3.is_irreducible(F3.enumerate(i)) ? 1 : 0;
  CHECK(count == 18);
}

TEST_CASE("ord is a homomorphism on nonzero elements")
{
  struct Case {
    Domain d;
    Element prime;
  };
  const Domain F2 = Domain::poly_over_gf(2), F3 = Domain::poly_over_gf(3);
  std::vector<Case> cases{{Domain::integers(), z(3)}, {Domain::integers(), z(2)},
                          {F2, gf(F2, "t^2+t+1")}, {F3, gf(F3, "t+1")}};
  for (const auto& c : cases) {
    Sampler s(c.d, 9);
    for (int i = 0; i < 300; ++i) {
      Element x = s.nonzero_element(c.d.is_integers() ? 500 : 5);
      Element y = s.nonzero_element(c.d.is_integers() ? 500 : 5);
      x = c.d.mul(x, c.d.pow(c.prime, i % 3));
      CHECK(c.d.ord_at(c.d.mul(x, y), c.prime).order ==
            c.d.ord_at(x, c.prime).order + c.d.ord_at(y, c.prime).order);
    }
  }
}

TEST_CASE("gcd is canonical")
{
  const Domain Z = Domain::integers();
  CHECK(Z.gcd(z(-12), z(18)) == z(6));
  CHECK(Z.gcd(z(0), z(0)) == z(0));
  const Domain F3 = Domain::poly_over_gf(3);
  CHECK(F3.gcd(gf(F3, "2*t^2+2"), gf(F3, "t^2+1")) == gf(F3, "t^2+1"));
}

TEST_CASE("domain parsing and names")
{
  CHECK(Domain::parse("Z").is_integers());
  CHECK(Domain::parse("GF(3)[t]") == Domain::poly_over_gf(3));
  CHECK(Domain::parse("GF(4)[t]").name() == "GF(4)[t]");
  CHECK_THROWS(Domain::parse("GF(6)[t]"));
  CHECK_THROWS(Domain::parse("Q"));
  CHECK(Domain::integers().enumeration_scheme() != Domain::poly_over_gf(2).enumeration_scheme());
}
