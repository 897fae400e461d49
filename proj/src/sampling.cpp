#include <radocert/sampling.hpp>

namespace radocert {

Element Sampler::element(unsigned bound)
{
  if (domain_.is_integers()) {
    std::uniform_int_distribution<long long> dist(-static_cast<long long>(bound), bound);
    return domain_.from_int(dist(rng_));
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, domain_.q() - 1);
  GfPoly g;
  for (unsigned i = 0; i < bound; ++i) g.coeffs.push_back(static_cast<FiniteField::Code>(coeff(rng_)));
  while (!g.coeffs.empty() && g.coeffs.back() == 0) g.coeffs.pop_back();
  return Element(std::move(g));
}

Element Sampler::nonzero_element(unsigned bound)
{
  while (true) {
    Element e = element(bound);
    if (!domain_.is_zero(e)) return e;
  }
}

Fraction Sampler::nonzero_fraction(unsigned bound)
{
  return domain_.fraction(nonzero_element(bound), nonzero_element(bound));
}

MultiPoly Sampler::poly(std::size_t nvars, unsigned max_degree, std::size_t max_terms,
                        unsigned coeff_bound)
{
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  while (true) {
    MultiPoly p(domain_, nvars);
    const std::size_t k = nterms(rng_);
    for (std::size_t t = 0; t < k; ++t) {
      Exponents e(nvars, 0);
      const unsigned d = t == 0 ? max_degree : deg(rng_);
      for (unsigned j = 0; j < d; ++j) ++e[var(rng_)];
      p.add_term(e, nonzero_element(coeff_bound));
    }
    if (!p.is_zero() && p.degree() == max_degree) return p;
  }
}

}  // namespace radocert
