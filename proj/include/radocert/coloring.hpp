#ifndef RADOCERT_COLORING_HPP
#define RADOCERT_COLORING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <radocert/window_search.hpp>

namespace radocert {

// Explicit finite colorings of R \ {0} used to scan for monochromatic roots.
//
//   DigitBaseP (Z only): the least significant nonzero base-p digit of |x|, or
//     with `most_significant` the leading base-p digit. Colors 1..p-1; with
//     `split_sign` negative x get p-1 extra colors.
//   OrdMod: ord_prime(x) mod m, colors 0..m-1.
struct ColoringSpec {
  enum class Family { DigitBaseP, OrdMod };

  Family family = Family::DigitBaseP;
  Integer base = 3;               // DigitBaseP
  bool most_significant = false;  // DigitBaseP
  bool split_sign = false;        // DigitBaseP
  Element prime;                  // OrdMod
  unsigned modulus = 1;           // OrdMod

  static ColoringSpec digit_base_p(const Integer& p, bool most_significant = false,
                                   bool split_sign = false);
  static ColoringSpec ord_mod(const Domain& domain, const Element& prime, unsigned modulus);
  // "basep:3", "basep:3:msd", "basep:3:signed", "ordmod:t:4", "ordmod:2:3".
  static ColoringSpec parse(const Domain& domain, const std::string& text);

  std::string describe(const Domain& domain) const;
  // Number of color values the spec can produce.
  std::size_t palette_size() const;
  // Dense index in [0, palette_size()) for a color value.
  std::uint32_t palette_index(std::uint32_t color) const;
};

// Throws PreconditionError for x = 0 or an incompatible domain.
std::uint32_t color_of(const Domain& domain, const ColoringSpec& spec, const Element& x);

struct ScanResult {
  bool clean = true;
  std::vector<std::size_t> root;  // window indices of the least monochromatic root
};

ScanResult refutation_scan(const MultiPoly& p, const ColoringSpec& spec, const Window& w,
                           bool injective);

}  // namespace radocert

#endif
