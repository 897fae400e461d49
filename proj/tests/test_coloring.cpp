#include <doctest.h>

#include <radocert/coloring.hpp>
#include <radocert/errors.hpp>
#include <radocert/sampling.hpp>
#include <radocert/syntax.hpp>

#include "oracles.hpp"

using namespace radocert;
using oracle::poly;
using oracle::z;

TEST_CASE("color_of examples")
{
  const Domain Z = Domain::integers();
  const ColoringSpec lsd = ColoringSpec::digit_base_p(3);
  CHECK(color_of(Z, lsd, z(18)) == 2);
  CHECK(color_of(Z, lsd, z(17)) == 2);
  CHECK(color_of(Z, lsd, z(-4)) == 1);
  CHECK_THROWS_AS(color_of(Z, lsd, z(0)), PreconditionError);

  const ColoringSpec msd = ColoringSpec::digit_base_p(3, true);
  CHECK(color_of(Z, msd, z(18)) == 2);  // 200 in base 3
  CHECK(color_of(Z, msd, z(5)) == 1);   // 12 in base 3

  const ColoringSpec sign = ColoringSpec::digit_base_p(3, false, true);
  CHECK(color_of(Z, sign, z(4)) != color_of(Z, sign, z(-4)));
  CHECK(sign.palette_size() == 4);

  const Domain F2 = Domain::poly_over_gf(2);
  const ColoringSpec ord = ColoringSpec::ord_mod(F2, parse_element(F2, "t"), 3);
  CHECK(color_of(F2, ord, parse_element(F2, "t^3+t^2")) == 2);
  CHECK(color_of(F2, ord, parse_element(F2, "t+1")) == 0);
  CHECK(color_of(F2, ord, parse_element(F2, "t^4")) == 1);
}

TEST_CASE("spec parsing")
{
  const Domain Z = Domain::integers();
  const ColoringSpec a = ColoringSpec::parse(Z, "basep:3");
  CHECK(a.family == ColoringSpec::Family::DigitBaseP);
  CHECK(a.base == 3);
  CHECK_FALSE(a.most_significant);
  CHECK(ColoringSpec::parse(Z, "basep:5:msd").most_significant);
  CHECK(ColoringSpec::parse(Z, "basep:5:signed").split_sign);
  const ColoringSpec b = ColoringSpec::parse(Z, "ordmod:2:3");
  CHECK(b.family == ColoringSpec::Family::OrdMod);
  CHECK(b.modulus == 3);
  const Domain F2 = Domain::poly_over_gf(2);
  CHECK(ColoringSpec::parse(F2, "ordmod:t:4").describe(F2) == "ordmod:t:4");
  CHECK_THROWS(ColoringSpec::parse(Z, "basep:4"));
  CHECK_THROWS(ColoringSpec::parse(Z, "ordmod:6:2"));
  CHECK_THROWS(ColoringSpec::parse(F2, "basep:3"));
  CHECK_THROWS(ColoringSpec::parse(Z, "stripes:2"));
  CHECK_THROWS(ColoringSpec::parse(Z, "ordmod:3:0"));
}

TEST_CASE("digit colorings are invariant under multiplication by the base")
{
  const Domain Z = Domain::integers();
  Sampler s(Z, 4);
  for (long long p : {2LL, 3LL, 5LL, 7LL}) {
    const ColoringSpec spec = ColoringSpec::digit_base_p(Integer(p));
    for (int i = 0; i < 500; ++i) {
      const Element x = s.nonzero_element(100000);
      CHECK(color_of(Z, spec, Z.mul(z(p), x)) == color_of(Z, spec, x));
      const auto c = color_of(Z, spec, x);
      CHECK(c >= 1);
      CHECK(c <= p - 1);
      CHECK(spec.palette_index(c) < spec.palette_size());
    }
  }
}

TEST_CASE("ord colorings are periodic in the prime power")
{
  const Domain F3 = Domain::poly_over_gf(3);
  const Element prime = parse_element(F3, "t^2+1");
  for (unsigned m : {2u, 3u, 5u}) {
    const ColoringSpec spec = ColoringSpec::ord_mod(F3, prime, m);
    Sampler s(F3, 6);
    for (int i = 0; i < 300; ++i) {
      const Element x = s.nonzero_element(6);
      CHECK(color_of(F3, spec, F3.mul(x, F3.pow(prime, m))) == color_of(F3, spec, x));
    }
  }
  const Domain Z = Domain::integers();
  const ColoringSpec two = ColoringSpec::ord_mod(Z, z(2), 2);
  Sampler s(Z, 8);
  for (int i = 0; i < 300; ++i) {
    const Element x = s.nonzero_element(1000);
    CHECK(color_of(Z, two, Z.mul(x, z(4))) == color_of(Z, two, x));
  }
  CHECK_THROWS(ColoringSpec::ord_mod(F3, parse_element(F3, "t^2-1"), 2));
}

TEST_CASE("refutation_scan examples")
{
  const Domain Z = Domain::integers();
  const ColoringSpec lsd = ColoringSpec::digit_base_p(3);
  CHECK(refutation_scan(poly(Z, "x-2*y"), lsd, Window::parse(Z, "1..200"), false).clean);

  const Window w10 = Window::parse(Z, "1..10");
  const ScanResult r = refutation_scan(poly(Z, "x+y-z"), lsd, w10, false);
  REQUIRE_FALSE(r.clean);
  std::vector<long long> root;
  for (auto i : r.root) root.push_back(static_cast<long long>(w10[i].integer()));
  CHECK(root == std::vector<long long>{1, 3, 4});

  const Domain F2 = Domain::poly_over_gf(2);
  const ColoringSpec ord = ColoringSpec::ord_mod(F2, parse_element(F2, "t"), 2);
  for (const auto& wt : {"prefix:7", "prefix:63"}) {
    const Window w = Window::parse(F2, wt);
    const ScanResult s = refutation_scan(poly(F2, "x+y-z"), ord, w, false);
    REQUIRE_FALSE(s.clean);
    std::vector<Element> pt;
    for (auto i : s.root) pt.push_back(w[i]);
    CHECK(F2.is_zero(poly(F2, "x+y-z").eval(std::span<const Element>(pt))));
    for (const auto& x : pt) CHECK(color_of(F2, ord, x) == color_of(F2, ord, pt.front()));
  }
}

TEST_CASE("a clean scan is a proper coloring of the window")
{
  const Domain Z = Domain::integers();
  struct Case {
    std::string poly;
    std::string spec;
    bool injective;
  };
  const std::vector<Case> cases{{"x-2*y", "basep:3", false},     {"x-3*y", "basep:2", false},
                                {"x-2*y", "basep:3:msd", false}, {"x+y", "basep:3:signed", false},
                                {"x-4*y", "ordmod:2:2", false},  {"x+y-3*z", "basep:5", false}};
  for (const auto& c : cases) {
    const MultiPoly p = poly(Z, c.poly);
    const ColoringSpec spec = ColoringSpec::parse(Z, c.spec);
    const Window w = Window::parse(Z, "1..12");
    const ScanResult scan = refutation_scan(p, spec, w, c.injective);
    if (!scan.clean) continue;
    const WindowCertificate cert = check_window_l_pr(p, w, spec.palette_size(), c.injective);
    CHECK_MESSAGE(cert.kind == CertificateKind::PartitionColorable, c.poly << " under " << c.spec);
    std::vector<std::uint32_t> coloring;
    for (const auto& x : w.elements()) coloring.push_back(spec.palette_index(color_of(Z, spec, x)));
    CHECK_FALSE(has_monochromatic_edge(enumerate_roots(p, w, c.injective).edges, coloring));
  }
}
