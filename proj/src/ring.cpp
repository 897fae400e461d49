#include <radocert/ring.hpp>

#include <radocert/errors.hpp>

#include <boost/multiprecision/miller_rabin.hpp>

#include <map>
#include <mutex>
#include <random>
#include <regex>

namespace radocert {

namespace {

void trim(GfPoly& a)
{
  while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
}

std::shared_ptr<const FiniteField> cached_field(std::uint64_t q)
{
  static std::mutex mutex;
  static std::map<std::uint64_t, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const FiniteField>(q);
  cache.emplace(q, field);
  return field;
}

bool is_rational_prime(Integer n)
{
  if (n < 0) n = -n;
  if (n < 2) return false;
  if (n < 1'000'000) {
    const auto v = static_cast<unsigned long>(n);
    for (unsigned long d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }
  std::mt19937 rng(12345);
  return boost::multiprecision::miller_rabin_test(n, 40, rng);
}

}  // namespace

bool operator<(const Element& a, const Element& b)
{
  if (a.holds_integer() != b.holds_integer()) return a.holds_integer();
  if (a.holds_integer()) return a.integer() < b.integer();
  const auto& x = a.gf().coeffs;
  const auto& y = b.gf().coeffs;
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

Domain Domain::integers() { return Domain(Kind::Integers, nullptr); }

Domain Domain::poly_over_gf(std::uint64_t q)
{
  return Domain(Kind::PolyOverGF, cached_field(q));
}

Domain Domain::parse(const std::string& text)
{
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "Z" || s == "ZZ" || s == "Integers") return integers();
  static const std::regex gf(R"((?:GF|F)\((\d+)\)(?:\[t\])?)");
  std::smatch m;
  if (std::regex_match(s, m, gf)) {
    if (m[1].length() > 12) throw ParseError("field order too large", text, 0);
    return poly_over_gf(std::stoull(m[1].str()));
  }
  throw ParseError("unknown domain (expected Z or GF(q)[t])", text, 0);
}

std::uint64_t Domain::q() const { return field_ ? field_->order() : 0; }

std::uint32_t Domain::characteristic() const
{
  return field_ ? field_->characteristic() : 0;
}

const FiniteField& Domain::field() const
{
  if (!field_) throw PreconditionError("Z has no coefficient field");
  return *field_;
}

std::string Domain::name() const
{
  if (is_integers()) return "Z";
  return "GF(" + std::to_string(q()) + ")[t]";
}

std::string Domain::enumeration_scheme() const
{
  return is_integers() ? "zigzag-v1" : "base-q-digits-v1";
}

bool operator==(const Domain& a, const Domain& b)
{
  return a.kind_ == b.kind_ && a.q() == b.q();
}

Element Domain::zero() const
{
  if (is_integers()) return Element(Integer(0));
  return Element(GfPoly{});
}

Element Domain::one() const { return from_int(1); }

Element Domain::from_int(long long n) const { return from_integer(Integer(n)); }

Element Domain::from_integer(const Integer& n) const
{
  if (is_integers()) return Element(n);
  GfPoly g{{field_->from_integer(n)}};
  trim(g);
  return Element(std::move(g));
}

Element Domain::indeterminate() const
{
  if (is_integers()) throw PreconditionError("t is not an element of Z");
  return Element(GfPoly{{0, 1}});
}

Element Domain::from_field_code(FiniteField::Code c) const
{
  if (is_integers()) throw PreconditionError("field codes require GF(q)[t]");
  if (c >= q()) throw PreconditionError("field code out of range");
  GfPoly g{{c}};
  trim(g);
  return Element(std::move(g));
}

bool Domain::is_zero(const Element& a) const
{
  return is_integers() ? a.integer() == 0 : a.gf().is_zero();
}

bool Domain::is_one(const Element& a) const
{
  if (is_integers()) return a.integer() == 1;
  return a.gf().coeffs.size() == 1 && a.gf().coeffs[0] == 1;
}

bool Domain::is_unit(const Element& a) const
{
  if (is_integers()) return a.integer() == 1 || a.integer() == -1;
  return a.gf().coeffs.size() == 1;
}

// ---------------------------------------------------------------------------
// F_q[t] kernels

GfPoly Domain::gf_add(const GfPoly& a, const GfPoly& b) const
{
  const auto& f = *field_;
  GfPoly out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    const auto x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    const auto y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    out.coeffs[i] = f.add(x, y);
  }
  trim(out);
  return out;
}

GfPoly Domain::gf_neg(const GfPoly& a) const
{
  GfPoly out = a;
  for (auto& c : out.coeffs) c = field_->neg(c);
  return out;
}

GfPoly Domain::gf_mul(const GfPoly& a, const GfPoly& b) const
{
  if (a.is_zero() || b.is_zero()) return {};
  const auto& f = *field_;
  GfPoly out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] = f.add(out.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
  }
  trim(out);
  return out;
}

std::pair<GfPoly, GfPoly> Domain::gf_divmod(const GfPoly& a, const GfPoly& b) const
{
  if (b.is_zero()) throw DivisibilityError("division by zero in " + name());
  const auto& f = *field_;
  GfPoly rem = a;
  GfPoly quot;
  if (rem.coeffs.size() < b.coeffs.size()) return {quot, rem};
  quot.coeffs.assign(rem.coeffs.size() - b.coeffs.size() + 1, 0);
  const auto lead_inv = f.inv(b.coeffs.back());
  while (!rem.is_zero() && rem.coeffs.size() >= b.coeffs.size()) {
    const std::size_t shift = rem.coeffs.size() - b.coeffs.size();
    const auto c = f.mul(rem.coeffs.back(), lead_inv);
    quot.coeffs[shift] = c;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      rem.coeffs[shift + j] = f.sub(rem.coeffs[shift + j], f.mul(c, b.coeffs[j]));
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

GfPoly Domain::gf_powmod(const GfPoly& base, std::uint64_t e, const GfPoly& mod) const
{
  GfPoly result{{1}};
  GfPoly b = gf_divmod(base, mod).second;
  while (e > 0) {
    if (e & 1) result = gf_divmod(gf_mul(result, b), mod).second;
    b = gf_divmod(gf_mul(b, b), mod).second;
    e >>= 1;
  }
  return result;
}

// Ben-Or: f of degree n is irreducible iff gcd(t^(q^i) - t, f) = 1 for
// 1 <= i <= n/2.
bool Domain::gf_irreducible(const GfPoly& f) const
{
  const long n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const GfPoly t{{0, 1}};
  GfPoly power = t;
  for (long i = 1; i <= n / 2; ++i) {
    power = gf_powmod(power, q(), f);
    const GfPoly diff = gf_add(power, gf_neg(t));
    const Element g = gcd(Element(diff), Element(f));
    if (!is_one(g)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Element Domain::add(const Element& a, const Element& b) const
{
  if (is_integers()) return Element(a.integer() + b.integer());
  return Element(gf_add(a.gf(), b.gf()));
}

Element Domain::sub(const Element& a, const Element& b) const
{
  if (is_integers()) return Element(a.integer() - b.integer());
  return Element(gf_add(a.gf(), gf_neg(b.gf())));
}

Element Domain::neg(const Element& a) const
{
  if (is_integers()) return Element(Integer(-a.integer()));
  return Element(gf_neg(a.gf()));
}

Element Domain::mul(const Element& a, const Element& b) const
{
  if (is_integers()) return Element(a.integer() * b.integer());
  return Element(gf_mul(a.gf(), b.gf()));
}

Element Domain::pow(const Element& a, unsigned e) const
{
  if (is_integers()) return Element(Integer(boost::multiprecision::pow(a.integer(), e)));
  Element result = one();
  Element base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::pair<Element, Element> Domain::divmod(const Element& a, const Element& b) const
{
  if (is_zero(b)) throw DivisibilityError("division by zero in " + name());
  if (is_integers()) {
    Integer quot, rem;
    boost::multiprecision::divide_qr(a.integer(), b.integer(), quot, rem);
    return {Element(quot), Element(rem)};
  }
  auto [quot, rem] = gf_divmod(a.gf(), b.gf());
  return {Element(std::move(quot)), Element(std::move(rem))};
}

Element Domain::exact_div(const Element& a, const Element& b) const
{
  if (is_zero(b)) throw DivisibilityError("exact_div by zero in " + name());
  auto [quot, rem] = divmod(a, b);
  if (!is_zero(rem))
    throw DivisibilityError(format(b) + " does not divide " + format(a) + " in " + name());
  return quot;
}

Element Domain::arith(ArithOp op, const Element& a, const Element& b) const
{
  switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::ExactDiv: return exact_div(a, b);
  }
  throw PreconditionError("unknown arithmetic operation");
}

bool Domain::divides(const Element& b, const Element& a) const
{
  if (is_zero(b)) return is_zero(a);
  return is_zero(divmod(a, b).second);
}

Element Domain::gcd(const Element& a, const Element& b) const
{
  if (is_integers()) return Element(Integer(boost::multiprecision::gcd(a.integer(), b.integer())));
  Element x = a, y = b;
  while (!is_zero(y)) {
    Element r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return normalize(x);
}

Element Domain::canonical_unit(const Element& a) const
{
  if (is_zero(a)) return one();
  if (is_integers()) return from_int(a.integer() < 0 ? -1 : 1);
  return Element(GfPoly{{a.gf().coeffs.back()}});
}

Element Domain::normalize(const Element& a) const
{
  if (is_zero(a)) return a;
  if (is_integers()) return a.integer() < 0 ? neg(a) : a;
  const auto lead = a.gf().coeffs.back();
  if (lead == 1) return a;
  const auto inv = field_->inv(lead);
  GfPoly out = a.gf();
  for (auto& c : out.coeffs) c = field_->mul(c, inv);
  return Element(std::move(out));
}

Element Domain::enumerate(const Integer& index) const
{
  if (index < 0) throw PreconditionError("enumeration index must be non-negative");
  if (is_integers()) {
    // 0, 1, -1, 2, -2, ...
    if (index == 0) return zero();
    const Integer half = (index + 1) / 2;
    return Element(index % 2 == 1 ? half : Integer(-half));
  }
  GfPoly g;
  Integer rest = index;
  const Integer base = q();
  while (rest > 0) {
    g.coeffs.push_back(static_cast<FiniteField::Code>(rest % base));
    rest /= base;
  }
  return Element(std::move(g));
}

Integer Domain::index_of(const Element& a) const
{
  if (is_integers()) {
    const Integer& v = a.integer();
    if (v == 0) return 0;
    return v > 0 ? Integer(2 * v - 1) : Integer(-2 * v);
  }
  Integer index = 0;
  const Integer base = q();
  for (std::size_t i = a.gf().coeffs.size(); i-- > 0;) index = index * base + a.gf().coeffs[i];
  return index;
}

long Domain::size_hint(const Element& a) const
{
  if (is_integers()) {
    if (a.integer() == 0) return -1;
    return static_cast<long>(boost::multiprecision::msb(abs(a.integer())));
  }
  return a.gf().degree();
}

bool Domain::is_irreducible(const Element& a) const
{
  if (is_integers()) return is_rational_prime(a.integer());
  return gf_irreducible(a.gf());
}

Valuation Domain::ord_at(const Element& x, const Element& prime) const
{
  if (!is_irreducible(prime))
    throw PreconditionError(format(prime) + " is not irreducible in " + name());
  if (is_zero(x)) return {0, true};
  long long order = 0;
  Element rest = x;
  while (true) {
    auto [quot, rem] = divmod(rest, prime);
    if (!is_zero(rem)) break;
    rest = std::move(quot);
    ++order;
  }
  return {order, false};
}

// ---------------------------------------------------------------------------
// fraction field

Fraction Domain::fraction(const Element& num, const Element& den) const
{
  if (is_zero(den)) throw DivisibilityError("zero denominator");
  if (is_zero(num)) return {zero(), one()};
  const Element g = gcd(num, den);
  Element n = exact_div(num, g);
  Element d = exact_div(den, g);
  const Element u = canonical_unit(d);
  if (!is_one(u)) {
    n = exact_div(n, u);
    d = exact_div(d, u);
  }
  return {std::move(n), std::move(d)};
}

Fraction Domain::embed(const Element& a) const { return {a, one()}; }

Fraction Domain::add(const Fraction& a, const Fraction& b) const
{
  if (is_one(a.den) && is_one(b.den)) return {add(a.num, b.num), one()};
  return fraction(add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den));
}

Fraction Domain::sub(const Fraction& a, const Fraction& b) const { return add(a, neg(b)); }

Fraction Domain::neg(const Fraction& a) const { return {neg(a.num), a.den}; }

Fraction Domain::mul(const Fraction& a, const Fraction& b) const
{
  if (is_one(a.den) && is_one(b.den)) return {mul(a.num, b.num), one()};
  return fraction(mul(a.num, b.num), mul(a.den, b.den));
}

Fraction Domain::inv(const Fraction& a) const
{
  if (is_zero(a.num)) throw DivisibilityError("inverse of zero");
  return fraction(a.den, a.num);
}

Fraction Domain::div(const Fraction& a, const Fraction& b) const { return mul(a, inv(b)); }

Fraction Domain::pow(const Fraction& a, unsigned e) const
{
  // a reduced implies a^e reduced; the denominator stays canonical.
  return {pow(a.num, e), pow(a.den, e)};
}

// ---------------------------------------------------------------------------

std::string Domain::format(const Element& a) const
{
  if (is_integers()) return a.integer().str();
  const auto& c = a.gf().coeffs;
  if (c.empty()) return "0";
  const auto p = field_->characteristic();
  auto coeff_text = [&](FiniteField::Code code) {
    if (code < p) return std::to_string(code);
    return "{" + std::to_string(code) + "}";
  };
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += coeff_text(c[i]);
      continue;
    }
    if (c[i] != 1) out += coeff_text(c[i]) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string Domain::format(const Fraction& a) const
{
  if (is_one(a.den)) return format(a.num);
  auto wrap = [&](const Element& e) {
    std::string s = format(e);
    if (!is_integers() && s.find('+') != std::string::npos) return "(" + s + ")";
    return s;
  };
  return wrap(a.num) + "/" + wrap(a.den);
}

}  // namespace radocert
