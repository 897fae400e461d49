#ifndef RADOCERT_REDUCTIONS_HPP
#define RADOCERT_REDUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include <radocert/poly.hpp>

namespace radocert {

// Image of one variable under a rational substitution num/den. An absent
// denominator means the image is the polynomial `num` itself.
struct RationalImage {
  MultiPoly num;
  std::optional<MultiPoly> den;
};

// Computes sum_terms c * prod_i num_i^(a_i) * den_i^(D - a_i) with
// D = clearing_exponent, i.e. p(num/den) times prod_i den_i^D restricted to
// the variables that carry a denominator. Requires D >= deg_i(p) for each
// variable with a denominator.
MultiPoly substitute_cleared(const MultiPoly& p, const std::vector<RationalImage>& images,
                             std::size_t target_nvars, unsigned clearing_exponent);

// p'(y_1..y_n, z_1..z_n) = p(y_1+z_1, ..., y_n+z_n).
MultiPoly htp_shift(const MultiPoly& p);

struct HomogenizeOptions {
  // Variables to replace; empty means all of them, in order.
  std::vector<std::size_t> variables;
  // Defaults to deg(p).
  std::optional<unsigned> clearing_exponent;
};

// Each selected x_i becomes (z_{3i-2} - z_{3i-1}) / z_{3i}; the denominators
// are cleared with (prod z_{3i})^deg(p). Unselected variables keep their
// position; every replaced variable expands into three in place.
MultiPoly quotient3_homogenize(const MultiPoly& p, const HomogenizeOptions& options = {});

// Each selected x_i becomes (z_{4i-3} - z_{4i-2}) / (z_{4i-1} - z_{4i}),
// cleared with (prod (z_{4i-1} - z_{4i}))^deg(p).
MultiPoly diffquotient4_homogenize(const MultiPoly& p, const HomogenizeOptions& options = {});

enum class GateMode { Multiplicative, Additive };

// Replaces x_i by y_1/y_2 (times y_2^deg(p)) or by y_1 - y_2. The two new
// variables take the place of x_i.
MultiPoly ratio_gate(const MultiPoly& p, GateMode mode, std::size_t index,
                     std::optional<unsigned> clearing_exponent = std::nullopt);

enum class Transform { Shift, Quotient3, DiffQuotient4, GateMul, GateAdd };

std::string to_string(Transform t);
// "shift", "q3", "dq4", "gate:mul", "gate:add".
Transform parse_transform(const std::string& id);

struct ReductionReport {
  MultiPoly input;
  MultiPoly output;
  Transform transform;
  std::size_t gated_variable = 0;            // gates only
  std::optional<unsigned> homogeneous_degree;  // set iff the output is homogeneous
  bool translation_invariant = false;
  bool identity_checked = false;  // defining identity held on every sample point
  std::size_t identity_samples = 0;
};

// Applies the transform and re-verifies the output's structure with the poly
// predicates; the defining evaluation identity is checked on `samples`
// deterministic pseudo-random points.
ReductionReport reduce(const MultiPoly& p, Transform t, std::size_t gated_variable = 0,
                       std::size_t samples = 64);

// Variable names for a transform's output, derived from the input names.
std::vector<std::string> output_variable_names(Transform t, std::span<const std::string> input_names,
                                               std::size_t gated_variable = 0);

// Checks the defining identity of `t` at one point of the output ring. Returns
// nullopt when the point makes a cleared denominator vanish.
std::optional<bool> check_identity(const MultiPoly& input, const MultiPoly& output, Transform t,
                                   std::size_t gated_variable, std::span<const Fraction> point);

}  // namespace radocert

#endif
