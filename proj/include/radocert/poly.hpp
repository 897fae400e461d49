#ifndef RADOCERT_POLY_HPP
#define RADOCERT_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <radocert/ring.hpp>

namespace radocert {

using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial over a Domain in positional variables
// x_0 .. x_{n-1}. No zero coefficients are stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Element>;

  MultiPoly(Domain domain, std::size_t nvars) : domain_(std::move(domain)), nvars_(nvars) {}

  static MultiPoly constant(const Domain& domain, std::size_t nvars, const Element& c);
  static MultiPoly variable(const Domain& domain, std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Domain& domain, const Exponents& exps, const Element& c);

  const Domain& domain() const { return domain_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Max total degree; 0 for the zero polynomial.
  unsigned degree() const;
  unsigned degree_in(std::size_t var) const;
  Element coefficient(const Exponents& exps) const;

  // Adds c * x^exps, dropping the term if it cancels.
  void add_term(const Exponents& exps, const Element& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Element& c) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b)
  {
    return a.domain_ == b.domain_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Ring-valued evaluation at a point of R^n.
  Element eval(std::span<const Element> point) const;
  // Field-valued evaluation at a point of K^n.
  Fraction eval(std::span<const Fraction> point) const;

 private:
  void check_compatible(const MultiPoly& other) const;

  Domain domain_;
  std::size_t nvars_;
  Terms terms_;
};

// p(images_0, ..., images_{n-1}); every image lives in the same target ring.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images,
                     std::size_t target_nvars);

// Returns d if every term has total degree d (0 for the zero polynomial).
std::optional<unsigned> is_homogeneous(const MultiPoly& p);

// Decides p(x + r*1) == p(x) in R[x, r] by expanding the coefficient of each
// power r^k, k >= 1, and testing it for zero.
bool is_translation_invariant(const MultiPoly& p);

// One polynomial whose roots in K^n are the common roots of `ps`:
// acc <- acc^2 f(next/acc) with a polynomial f rootless in K.
MultiPoly combine_system(std::span<const MultiPoly> ps);

// The rootless f used by combine_system, as coefficients of 1, w, w^2.
std::vector<Element> rootless_quadratic(const Domain& domain);

// Natural-order variable names for positional variables.
std::vector<std::string> default_variable_names(std::size_t nvars);

// Renders p as an expression over `names` (one per variable).
std::string format_poly(const MultiPoly& p, std::span<const std::string> names);

}  // namespace radocert

#endif
