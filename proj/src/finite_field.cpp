#include <radocert/finite_field.hpp>

#include <radocert/errors.hpp>

#include <string>

namespace radocert {

namespace {

// Returns (p, k) with q = p^k, or (0, 0) when q is not a prime power.
std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q)
{
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

// Multiplies the digit vector `v` (an element of F_p[x]/(f)) by x.
void times_x(std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& f,
             std::uint32_t p)
{
  const std::size_t k = v.size();
  const std::uint32_t top = v[k - 1];
  for (std::size_t i = k - 1; i > 0; --i) v[i] = v[i - 1];
  v[0] = 0;
  // x^k = -(f_0 + ... + f_{k-1} x^{k-1})
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t sub = (static_cast<std::uint64_t>(top) * f[i]) % p;
    v[i] = static_cast<std::uint32_t>((v[i] + p - sub) % p);
  }
}

std::uint32_t encode(const std::vector<std::uint32_t>& digits, std::uint32_t p)
{
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
  return static_cast<std::uint32_t>(code);
}

}  // namespace

FiniteField::FiniteField(std::uint64_t order) : q_(order)
{
  auto [p, k] = prime_power(order);
  if (p == 0)
    throw PreconditionError("field order " + std::to_string(order) +
                            " is not a prime power");
  if (k == 1 && order >= (std::uint64_t{1} << 31))
    throw PreconditionError("prime field order too large");
  if (k > 1 && order > (std::uint64_t{1} << 20))
    throw PreconditionError("extension field order too large");
  p_ = p;
  degree_ = k;
  if (k == 1) {
    modulus_ = {0, 1};
    return;
  }

  const std::uint32_t q32 = static_cast<std::uint32_t>(order);
  exp_.resize(q32 - 1);
  log_.assign(q32, 0);
  std::vector<std::uint32_t> f(k + 1, 0);
  f[k] = 1;
  for (std::uint32_t low = 0; low < q32; ++low) {
    std::uint32_t c = low;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    if (f[0] == 0) continue;  // x divides f
    // x is primitive iff its order in F_p[x]/(f) is q-1; that forces f irreducible.
    std::vector<std::uint32_t> v(k, 0);
    v[0] = 1;
    bool primitive = true;
    for (std::uint32_t e = 0; e < q32 - 1; ++e) {
      const std::uint32_t code = encode(v, p);
      if (e > 0 && code == 1) {
        primitive = false;
        break;
      }
      exp_[e] = code;
      times_x(v, f, p);
    }
    if (primitive && encode(v, p) == 1) {
      modulus_ = f;
      for (std::uint32_t e = 0; e < q32 - 1; ++e) log_[exp_[e]] = e;
      return;
    }
  }
  throw PreconditionError("no primitive modulus found");  // unreachable
}

FiniteField::Code FiniteField::add(Code a, Code b) const
{
  if (degree_ == 1) {
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Code>(s >= p_ ? s - p_ : s);
  }
  if (p_ == 2) return a ^ b;
  Code out = 0, scale = 1;
  while (a != 0 || b != 0) {
    const Code d = (a % p_ + b % p_) % p_;
    out += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

FiniteField::Code FiniteField::neg(Code a) const
{
  if (degree_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Code out = 0, scale = 1;
  while (a != 0) {
    const Code d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

FiniteField::Code FiniteField::mul(Code a, Code b) const
{
  if (a == 0 || b == 0) return 0;
  if (degree_ == 1)
    return static_cast<Code>((static_cast<std::uint64_t>(a) * b) % p_);
  const std::uint64_t e = (static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1);
  return exp_[e];
}

FiniteField::Code FiniteField::inv(Code a) const
{
  if (a == 0) throw DivisibilityError("inverse of zero in F_" + std::to_string(q_));
  if (degree_ > 1) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  // extended Euclid in Z/p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Code>(t);
}

FiniteField::Code FiniteField::from_integer(const Integer& n) const
{
  Integer r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Code>(r);  // lands in the prime subfield: codes 0..p-1
}

}  // namespace radocert
