#ifndef RADOCERT_RING_HPP
#define RADOCERT_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <radocert/finite_field.hpp>

namespace radocert {

// Polynomial over F_q, little-endian coefficient codes, no trailing zeros.
// The empty sequence is 0.
struct GfPoly {
  std::vector<FiniteField::Code> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  friend bool operator==(const GfPoly&, const GfPoly&) = default;
};

// An element of Z or of F_q[t]. Which one is meaningful only relative to a
// Domain; all arithmetic goes through Domain.
class Element {
 public:
  Element() = default;
  Element(Integer value) : value_(std::move(value)) {}
  Element(GfPoly value) : value_(std::move(value)) {}

  bool holds_integer() const { return std::holds_alternative<Integer>(value_); }
  const Integer& integer() const { return std::get<Integer>(value_); }
  const GfPoly& gf() const { return std::get<GfPoly>(value_); }

  friend bool operator==(const Element& a, const Element& b) { return a.value_ == b.value_; }
  // Total order. Integers compare numerically; F_q[t] elements compare by
  // their enumeration index (as base-q numbers).
  friend bool operator<(const Element& a, const Element& b);

 private:
  std::variant<Integer, GfPoly> value_;
};

// num/den in Frac(R), reduced with a canonical denominator (positive over Z,
// monic over F_q[t]).
struct Fraction {
  Element num;
  Element den;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// ord_p(x). For x = 0 the value is 0 and `degenerate` is set.
struct Valuation {
  long long order = 0;
  bool degenerate = false;
};

enum class ArithOp { Add, Sub, Mul, ExactDiv };

// A computable Euclidean domain: Z or F_q[t]. Cheap to copy.
class Domain {
 public:
  enum class Kind { Integers, PolyOverGF };

  static Domain integers();
  static Domain poly_over_gf(std::uint64_t q);
  // "Z" or "GF(q)[t]" (also accepts "ZZ", "GF(q)").
  static Domain parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  std::uint64_t q() const;
  std::uint32_t characteristic() const;  // 0 for Z
  const FiniteField& field() const;
  std::string name() const;
  // Identifier of the bijection N -> R used by enumerate().
  std::string enumeration_scheme() const;

  friend bool operator==(const Domain& a, const Domain& b);

  // constructors
  Element zero() const;
  Element one() const;
  Element from_int(long long n) const;
  Element from_integer(const Integer& n) const;  // image under Z -> R
  Element indeterminate() const;                  // t; PolyOverGF only
  Element from_field_code(FiniteField::Code c) const;

  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const;
  bool is_unit(const Element& a) const;

  // ring arithmetic
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, unsigned e) const;
  // Throws DivisibilityError unless b != 0 and b | a.
  Element exact_div(const Element& a, const Element& b) const;
  Element arith(ArithOp op, const Element& a, const Element& b) const;
  // Euclidean division; over Z the remainder has the sign of the dividend.
  std::pair<Element, Element> divmod(const Element& a, const Element& b) const;
  bool divides(const Element& b, const Element& a) const;
  // Non-negative (Z) or monic (F_q[t]) gcd; gcd(0, 0) = 0.
  Element gcd(const Element& a, const Element& b) const;
  // The unit u with a/u canonical (sign or leading coefficient); 1 for a = 0.
  Element canonical_unit(const Element& a) const;
  Element normalize(const Element& a) const;  // a / canonical_unit(a)

  // Bijection N -> R. Z: 0, 1, -1, 2, -2, ...; F_q[t]: base-q digits of the
  // index are the coefficient codes.
  Element enumerate(const Integer& index) const;
  Integer index_of(const Element& a) const;

  // Degree in t (F_q[t]) or bit length (Z); -1 for zero. Used only for sizing.
  long size_hint(const Element& a) const;

  bool is_irreducible(const Element& a) const;
  // Throws PreconditionError unless `prime` is irreducible.
  Valuation ord_at(const Element& x, const Element& prime) const;

  // fraction field
  Fraction fraction(const Element& num, const Element& den) const;  // throws on den = 0
  Fraction embed(const Element& a) const;
  bool is_zero(const Fraction& a) const { return is_zero(a.num); }
  Fraction add(const Fraction& a, const Fraction& b) const;
  Fraction sub(const Fraction& a, const Fraction& b) const;
  Fraction neg(const Fraction& a) const;
  Fraction mul(const Fraction& a, const Fraction& b) const;
  Fraction div(const Fraction& a, const Fraction& b) const;
  Fraction inv(const Fraction& a) const;
  Fraction pow(const Fraction& a, unsigned e) const;

  // Text rendering. Z: decimal. F_q[t]: "t^3+2*t+1"; for q not prime a
  // coefficient outside the prime subfield is written "{code}".
  std::string format(const Element& a) const;
  std::string format(const Fraction& a) const;

 private:
  Domain(Kind kind, std::shared_ptr<const FiniteField> field)
      : kind_(kind), field_(std::move(field)) {}

  GfPoly gf_add(const GfPoly& a, const GfPoly& b) const;
  GfPoly gf_neg(const GfPoly& a) const;
  GfPoly gf_mul(const GfPoly& a, const GfPoly& b) const;
  std::pair<GfPoly, GfPoly> gf_divmod(const GfPoly& a, const GfPoly& b) const;
  GfPoly gf_powmod(const GfPoly& base, std::uint64_t e, const GfPoly& mod) const;
  bool gf_irreducible(const GfPoly& f) const;

  Kind kind_ = Kind::Integers;
  std::shared_ptr<const FiniteField> field_;
};

}  // namespace radocert

#endif
