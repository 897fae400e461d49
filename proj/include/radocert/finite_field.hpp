#ifndef RADOCERT_FINITE_FIELD_HPP
#define RADOCERT_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace radocert {

using Integer = boost::multiprecision::cpp_int;

// The finite field F_q, q = p^k.
//
// Elements are encoded as integer codes in [0, q). For prime q the code is the
// residue itself. For k > 1 the base-p digits of the code are the coordinates
// in the power basis 1, a, a^2, ... where a is a root of modulus(). The modulus
// is the least monic polynomial of degree k over F_p (coefficients read as a
// base-p number, constant term least significant) whose root generates the
// multiplicative group, so a is primitive and the choice is reproducible.
class FiniteField {
 public:
  using Code = std::uint32_t;

  explicit FiniteField(std::uint64_t order);

  std::uint64_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  bool is_prime_field() const { return degree_ == 1; }

  // Coefficients of the defining polynomial, little-endian, monic.
  // Equal to {0, 1} for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // throws DivisibilityError for 0

  // The image of n under the ring map Z -> F_q.
  Code from_integer(const Integer& n) const;

 private:
  std::uint64_t q_;
  std::uint32_t p_;
  unsigned degree_;
  std::vector<std::uint32_t> modulus_;
  // Discrete log tables, extension fields only.
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace radocert

#endif
