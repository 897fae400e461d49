#include <radocert/coloring.hpp>

#include <radocert/errors.hpp>
#include <radocert/syntax.hpp>

namespace radocert {

ColoringSpec ColoringSpec::digit_base_p(const Integer& p, bool most_significant, bool split_sign)
{
  if (p < 2 || p >= (Integer(1) << 31) || !Domain::integers().is_irreducible(Element(p)))
    throw PreconditionError("digit coloring base " + p.str() + " is not a prime");
  ColoringSpec spec;
  spec.family = Family::DigitBaseP;
  spec.base = p;
  spec.most_significant = most_significant;
  spec.split_sign = split_sign;
  return spec;
}

ColoringSpec ColoringSpec::ord_mod(const Domain& domain, const Element& prime, unsigned modulus)
{
  if (modulus < 1) throw PreconditionError("ord coloring modulus must be at least 1");
  if (!domain.is_irreducible(prime))
    throw PreconditionError(domain.format(prime) + " is not irreducible in " + domain.name());
  ColoringSpec spec;
  spec.family = Family::OrdMod;
  spec.prime = domain.normalize(prime);
  spec.modulus = modulus;
  return spec;
}

ColoringSpec ColoringSpec::parse(const Domain& domain, const std::string& text)
{
  std::vector<std::string> parts;
  std::vector<std::size_t> offsets;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string::npos ? std::string::npos : colon - start));
    offsets.push_back(start);
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  auto number = [&](std::size_t i) {
    const auto& s = parts[i];
    if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a positive integer", text, offsets[i]);
    return Integer(s);
  };
  try {
    if (parts[0] == "basep") {
      if (!domain.is_integers()) throw ParseError("basep colorings are defined over Z only", text, 0);
      if (parts.size() < 2) throw ParseError("expected basep:P", text, text.size());
      bool msd = false, sign = false;
      for (std::size_t i = 2; i < parts.size(); ++i) {
        if (parts[i] == "msd") msd = true;
        else if (parts[i] == "lsd") msd = false;
        else if (parts[i] == "signed") sign = true;
        else throw ParseError("unknown option '" + parts[i] + "' (lsd, msd, signed)", text, offsets[i]);
      }
      return digit_base_p(number(1), msd, sign);
    }
    if (parts[0] == "ordmod") {
      if (parts.size() != 3) throw ParseError("expected ordmod:PRIME:M", text, 0);
      Element prime;
      try {
        prime = parse_element(domain, parts[1]);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), text, offsets[1] + e.position());
      }
      const Integer m = number(2);
      if (m < 1 || m > 1'000'000) throw ParseError("modulus out of range", text, offsets[2]);
      return ord_mod(domain, prime, static_cast<unsigned>(m));
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), text, 0);
  }
  throw ParseError("unknown coloring family (basep or ordmod)", text, 0);
}

std::string ColoringSpec::describe(const Domain& domain) const
{
  if (family == Family::DigitBaseP) {
    std::string s = "basep:" + base.str() + (most_significant ? ":msd" : "");
    if (split_sign) s += ":signed";
    return s;
  }
  return "ordmod:" + domain.format(prime) + ":" + std::to_string(modulus);
}

std::size_t ColoringSpec::palette_size() const
{
  if (family == Family::OrdMod) return modulus;
  const auto p = static_cast<std::size_t>(base);
  return split_sign ? 2 * (p - 1) : p - 1;
}

std::uint32_t ColoringSpec::palette_index(std::uint32_t color) const
{
  if (family == Family::OrdMod) return color;
  // digit colors 1..p-1, negative ones p..2p-2
  return color - 1;
}

std::uint32_t color_of(const Domain& domain, const ColoringSpec& spec, const Element& x)
{
  if (domain.is_zero(x)) throw PreconditionError("colorings are defined on nonzero elements only");
  if (spec.family == ColoringSpec::Family::OrdMod) {
    const Valuation v = domain.ord_at(x, spec.prime);
    return static_cast<std::uint32_t>(v.order % spec.modulus);
  }
  if (!domain.is_integers()) throw PreconditionError("basep colorings are defined over Z only");
  const Integer& p = spec.base;
  Integer a = abs(x.integer());
  std::uint32_t digit;
  if (spec.most_significant) {
    while (a >= p) a /= p;
    digit = static_cast<std::uint32_t>(a);
  } else {
    while (a % p == 0) a /= p;
    digit = static_cast<std::uint32_t>(a % p);
  }
  if (spec.split_sign && x.integer() < 0) digit += static_cast<std::uint32_t>(p) - 1;
  return digit;
}

ScanResult refutation_scan(const MultiPoly& p, const ColoringSpec& spec, const Window& w,
                           bool injective)
{
  const Domain& d = p.domain();
  if (spec.family == ColoringSpec::Family::DigitBaseP && !d.is_integers())
    throw PreconditionError("basep colorings are defined over Z only");
  std::vector<std::uint32_t> colors(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) colors[i] = color_of(d, spec, w[i]);
  const RootHypergraph h = enumerate_roots(p, w, injective);
  for (const auto& t : h.tuples) {
    bool mono = true;
    for (std::size_t i : t) mono = mono && colors[i] == colors[t.front()];
    if (mono) return {false, t};
  }
  return {};
}

}  // namespace radocert
