#ifndef RADOCERT_SAMPLING_HPP
#define RADOCERT_SAMPLING_HPP

#include <random>

#include <radocert/poly.hpp>

namespace radocert {

// Deterministic pseudo-random ring elements and polynomials for identity
// checks and property tests.
class Sampler {
 public:
  explicit Sampler(const Domain& domain, std::uint64_t seed = 0x5eed) : domain_(domain), rng_(seed) {}

  // Z: uniform in [-bound, bound]. F_q[t]: uniform over degree < bound.
  Element element(unsigned bound);
  Element nonzero_element(unsigned bound);
  // num/den with den nonzero.
  Fraction nonzero_fraction(unsigned bound);
  // At most `max_terms` terms, total degree <= max_degree, coefficients from
  // element(coeff_bound); never the zero polynomial, and deg = max_degree.
  MultiPoly poly(std::size_t nvars, unsigned max_degree, std::size_t max_terms, unsigned coeff_bound);

  std::mt19937_64& rng() { return rng_; }

 private:
  Domain domain_;
  std::mt19937_64 rng_;
};

}  // namespace radocert

#endif
