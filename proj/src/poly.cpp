#include <radocert/poly.hpp>

#include <radocert/errors.hpp>

#include <numeric>

namespace radocert {

MultiPoly MultiPoly::constant(const Domain& domain, std::size_t nvars, const Element& c)
{
  MultiPoly p(domain, nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Domain& domain, std::size_t nvars, std::size_t index)
{
  if (index >= nvars) throw PreconditionError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(domain, e, domain.one());
}

MultiPoly MultiPoly::monomial(const Domain& domain, const Exponents& exps, const Element& c)
{
  MultiPoly p(domain, exps.size());
  p.add_term(exps, c);
  return p;
}

unsigned MultiPoly::degree() const
{
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const
{
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

Element MultiPoly::coefficient(const Exponents& exps) const
{
  auto it = terms_.find(exps);
  return it == terms_.end() ? domain_.zero() : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Element& c)
{
  if (exps.size() != nvars_) throw PreconditionError("exponent tuple has wrong length");
  if (domain_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second = domain_.add(it->second, c);
  if (domain_.is_zero(it->second)) terms_.erase(it);
}

void MultiPoly::check_compatible(const MultiPoly& other) const
{
  if (!(domain_ == other.domain_)) throw PreconditionError("polynomials over different domains");
  if (nvars_ != other.nvars_) throw PreconditionError("polynomials with different arity");
}

MultiPoly MultiPoly::operator-() const
{
  MultiPoly out(domain_, nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, domain_.neg(c));
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, domain_.neg(c));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
  a.check_compatible(b);
  const Domain& d = a.domain_;
  MultiPoly out(d, a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, d.mul(ca, cb));
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Element& c) const
{
  MultiPoly out(domain_, nvars_);
  for (const auto& [e, k] : terms_) out.add_term(e, domain_.mul(k, c));
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
  MultiPoly result = constant(domain_, nvars_, domain_.one());
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Element MultiPoly::eval(std::span<const Element> point) const
{
  if (point.size() != nvars_)
    throw PreconditionError("evaluation point has " + std::to_string(point.size()) +
                            " coordinates, polynomial has " + std::to_string(nvars_) +
                            " variables");
  // powers[i][k] = point_i^k
  std::vector<std::vector<Element>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    powers[i].push_back(domain_.one());
    const unsigned d = degree_in(i);
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(domain_.mul(powers[i].back(), point[i]));
  }
  Element sum = domain_.zero();
  for (const auto& [e, c] : terms_) {
    Element term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) term = domain_.mul(term, powers[i][e[i]]);
    sum = domain_.add(sum, term);
  }
  return sum;
}

Fraction MultiPoly::eval(std::span<const Fraction> point) const
{
  if (point.size() != nvars_)
    throw PreconditionError("evaluation point has " + std::to_string(point.size()) +
                            " coordinates, polynomial has " + std::to_string(nvars_) +
                            " variables");
  // Common denominator: value = sum c * prod num_i^e_i den_i^(D_i - e_i) / prod den_i^D_i
  // with D_i = degree_in(i). One reduction at the end.
  std::vector<unsigned> top(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) top[i] = degree_in(i);
  std::vector<std::vector<Element>> num_pow(nvars_), den_pow(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    num_pow[i].push_back(domain_.one());
    den_pow[i].push_back(domain_.one());
    for (unsigned k = 1; k <= top[i]; ++k) {
      num_pow[i].push_back(domain_.mul(num_pow[i].back(), point[i].num));
      den_pow[i].push_back(domain_.mul(den_pow[i].back(), point[i].den));
    }
  }
  Element numerator = domain_.zero();
  for (const auto& [e, c] : terms_) {
    Element term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term = domain_.mul(term, num_pow[i][e[i]]);
      if (top[i] != e[i]) term = domain_.mul(term, den_pow[i][top[i] - e[i]]);
    }
    numerator = domain_.add(numerator, term);
  }
  Element denominator = domain_.one();
  for (std::size_t i = 0; i < nvars_; ++i) denominator = domain_.mul(denominator, den_pow[i][top[i]]);
  return domain_.fraction(numerator, denominator);
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images,
                     std::size_t target_nvars)
{
  if (images.size() != p.nvars()) throw PreconditionError("substitute: one image per variable");
  const Domain& d = p.domain();
  for (const auto& img : images) {
    if (!(img.domain() == d) || img.nvars() != target_nvars)
      throw PreconditionError("substitute: image in the wrong ring");
  }
  std::vector<std::vector<MultiPoly>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    powers[i].push_back(MultiPoly::constant(d, target_nvars, d.one()));
    const unsigned top = p.degree_in(i);
    for (unsigned k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  MultiPoly out(d, target_nvars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(d, target_nvars, c);
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (e[i] != 0) term = term * powers[i][e[i]];
    out += term;
  }
  return out;
}

std::optional<unsigned> is_homogeneous(const MultiPoly& p)
{
  std::optional<unsigned> degree;
  for (const auto& [e, c] : p.terms()) {
    const unsigned d = std::accumulate(e.begin(), e.end(), 0u);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree.value_or(0);
}

namespace {

// C(n, k) mapped into the domain.
Element binomial(const Domain& d, unsigned n, unsigned k)
{
  Integer b = 1;
  for (unsigned i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return d.from_integer(b);
}

// Enumerates all a <= e (componentwise) with |a| = k.
template <typename F>
void for_each_lower(const Exponents& e, unsigned k, Exponents& a, std::size_t i, F&& f)
{
  if (i == e.size()) {
    if (k == 0) f();
    return;
  }
  unsigned rest = 0;
  for (std::size_t j = i + 1; j < e.size(); ++j) rest += e[j];
  const unsigned lo = k > rest ? k - rest : 0;
  const unsigned hi = std::min(e[i], k);
  for (unsigned v = lo; v <= hi; ++v) {
    a[i] = v;
    for_each_lower(e, k - v, a, i + 1, f);
  }
  a[i] = 0;
}

}  // namespace

bool is_translation_invariant(const MultiPoly& p)
{
  // p(x + r*1) = sum_k r^k sum_{|a| = k} prod C(e_i, a_i) x^(e - a).
  const Domain& d = p.domain();
  const unsigned top = p.degree();
  Exponents a(p.nvars(), 0), reduced(p.nvars(), 0);
  for (unsigned k = 1; k <= top; ++k) {
    MultiPoly slice(d, p.nvars());
    for (const auto& [e, c] : p.terms()) {
      if (std::accumulate(e.begin(), e.end(), 0u) < k) continue;
      for_each_lower(e, k, a, 0, [&] {
        Element coeff = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
          reduced[i] = e[i] - a[i];
          if (a[i] != 0 && a[i] != e[i]) coeff = d.mul(coeff, binomial(d, e[i], a[i]));
        }
        slice.add_term(reduced, coeff);
      });
    }
    if (!slice.is_zero()) return false;
  }
  return true;
}

std::vector<Element> rootless_quadratic(const Domain& d)
{
  if (d.is_integers()) return {d.one(), d.zero(), d.one()};  // w^2 + 1
  if (d.characteristic() == 2)
    return {d.indeterminate(), d.one(), d.one()};  // w^2 + w + t
  return {d.neg(d.indeterminate()), d.zero(), d.one()};  // w^2 - t
}

MultiPoly combine_system(std::span<const MultiPoly> ps)
{
  if (ps.empty()) throw PreconditionError("combine_system needs at least one polynomial");
  const auto f = rootless_quadratic(ps[0].domain());
  MultiPoly acc = ps[0];
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (!(ps[i].domain() == acc.domain()) || ps[i].nvars() != acc.nvars())
      throw PreconditionError("combine_system: mixed domains or arity");
    // acc^2 f(next/acc) = f0 acc^2 + f1 acc next + f2 next^2
    const MultiPoly& next = ps[i];
    acc = (acc * acc).scaled(f[0]) + (acc * next).scaled(f[1]) + (next * next).scaled(f[2]);
  }
  return acc;
}

std::vector<std::string> default_variable_names(std::size_t nvars)
{
  if (nvars <= 3) {
    static const char* xyz[] = {"x", "y", "z"};
    return std::vector<std::string>(xyz, xyz + nvars);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string format_poly(const MultiPoly& p, std::span<const std::string> names)
{
  if (names.size() != p.nvars()) throw PreconditionError("one name per variable required");
  if (p.is_zero()) return "0";
  const Domain& d = p.domain();
  // Graded order, highest degree first; reverse of the map order within a degree.
  std::vector<std::pair<const Exponents*, const Element*>> order;
  for (const auto& [e, c] : p.terms()) order.emplace_back(&e, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    const unsigned dx = std::accumulate(x.first->begin(), x.first->end(), 0u);
    const unsigned dy = std::accumulate(y.first->begin(), y.first->end(), 0u);
    if (dx != dy) return dx > dy;
    return *y.first < *x.first;
  });
  std::string out;
  for (const auto& [e, c] : order) {
    std::string monomial;
    for (std::size_t i = 0; i < e->size(); ++i) {
      if ((*e)[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += names[i];
      if ((*e)[i] > 1) monomial += "^" + std::to_string((*e)[i]);
    }
    std::string coeff = d.format(*c);
    bool negative = false;
    if (d.is_integers() && c->integer() < 0) {
      negative = true;
      coeff = coeff.substr(1);
    }
    const bool compound = coeff.find('+') != std::string::npos;
    std::string term;
    if (monomial.empty()) {
      term = compound && !out.empty() ? "(" + coeff + ")" : coeff;
    } else if (coeff == "1") {
      term = monomial;
    } else {
      term = (compound ? "(" + coeff + ")" : coeff) + "*" + monomial;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out;
}

}  // namespace radocert
