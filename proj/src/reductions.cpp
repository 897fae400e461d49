#include <radocert/reductions.hpp>

#include <radocert/errors.hpp>
#include <radocert/sampling.hpp>

namespace radocert {

MultiPoly substitute_cleared(const MultiPoly& p, const std::vector<RationalImage>& images,
                             std::size_t target_nvars, unsigned clearing_exponent)
{
  const Domain& d = p.domain();
  const std::size_t n = p.nvars();
  if (images.size() != n) throw PreconditionError("substitute_cleared: one image per variable");
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].den && p.degree_in(i) > clearing_exponent)
      throw PreconditionError("clearing exponent is smaller than the degree in a cleared variable");
  }
  auto power_table = [&](const MultiPoly& base, unsigned top) {
    std::vector<MultiPoly> pw{MultiPoly::constant(d, target_nvars, d.one())};
    for (unsigned k = 1; k <= top; ++k) pw.push_back(pw.back() * base);
    return pw;
  };
  std::vector<std::vector<MultiPoly>> num_pow(n), den_pow(n);
  for (std::size_t i = 0; i < n; ++i) {
    num_pow[i] = power_table(images[i].num, p.degree_in(i));
    if (images[i].den) den_pow[i] = power_table(*images[i].den, clearing_exponent);
  }
  MultiPoly out(d, target_nvars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(d, target_nvars, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) term = term * num_pow[i][e[i]];
      if (images[i].den && clearing_exponent != e[i]) term = term * den_pow[i][clearing_exponent - e[i]];
    }
    out += term;
  }
  return out;
}

MultiPoly htp_shift(const MultiPoly& p)
{
  const Domain& d = p.domain();
  const std::size_t n = p.nvars();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(MultiPoly::variable(d, 2 * n, i) + MultiPoly::variable(d, 2 * n, n + i));
  return substitute(p, images, 2 * n);
}

namespace {

std::vector<bool> selection(const MultiPoly& p, const HomogenizeOptions& options)
{
  std::vector<bool> selected(p.nvars(), options.variables.empty());
  for (std::size_t v : options.variables) {
    if (v >= p.nvars()) throw PreconditionError("variable index out of range");
    selected[v] = true;
  }
  return selected;
}

// `width` new variables per selected variable; `build` maps the first new
// index to the image.
template <typename Build>
MultiPoly homogenize(const MultiPoly& p, const HomogenizeOptions& options, std::size_t width,
                     Build build)
{
  const auto selected = selection(p, options);
  std::size_t target = 0;
  for (bool s : selected) target += s ? width : 1;
  std::vector<RationalImage> images;
  std::size_t next = 0;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    if (selected[i]) {
      images.push_back(build(target, next));
      next += width;
    } else {
      images.push_back({MultiPoly::variable(p.domain(), target, next), std::nullopt});
      ++next;
    }
  }
  return substitute_cleared(p, images, target, options.clearing_exponent.value_or(p.degree()));
}

}  // namespace

MultiPoly quotient3_homogenize(const MultiPoly& p, const HomogenizeOptions& options)
{
  const Domain& d = p.domain();
  return homogenize(p, options, 3, [&](std::size_t n, std::size_t at) {
    return RationalImage{MultiPoly::variable(d, n, at) - MultiPoly::variable(d, n, at + 1),
                         MultiPoly::variable(d, n, at + 2)};
  });
}

MultiPoly diffquotient4_homogenize(const MultiPoly& p, const HomogenizeOptions& options)
{
  const Domain& d = p.domain();
  return homogenize(p, options, 4, [&](std::size_t n, std::size_t at) {
    return RationalImage{MultiPoly::variable(d, n, at) - MultiPoly::variable(d, n, at + 1),
                         MultiPoly::variable(d, n, at + 2) - MultiPoly::variable(d, n, at + 3)};
  });
}

MultiPoly ratio_gate(const MultiPoly& p, GateMode mode, std::size_t index,
                     std::optional<unsigned> clearing_exponent)
{
  if (index >= p.nvars())
    throw PreconditionError("gate variable index " + std::to_string(index) + " out of range for " +
                            std::to_string(p.nvars()) + " variables");
  const Domain& d = p.domain();
  const std::size_t target = p.nvars() + 1;
  std::vector<RationalImage> images;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    const std::size_t at = i < index ? i : i + 1;
    if (i != index) {
      images.push_back({MultiPoly::variable(d, target, at), std::nullopt});
    } else if (mode == GateMode::Multiplicative) {
      images.push_back({MultiPoly::variable(d, target, i), MultiPoly::variable(d, target, i + 1)});
    } else {
      images.push_back(
          {MultiPoly::variable(d, target, i) - MultiPoly::variable(d, target, i + 1), std::nullopt});
    }
  }
  return substitute_cleared(p, images, target, clearing_exponent.value_or(p.degree()));
}

std::string to_string(Transform t)
{
  switch (t) {
    case Transform::Shift: return "shift";
    case Transform::Quotient3: return "q3";
    case Transform::DiffQuotient4: return "dq4";
    case Transform::GateMul: return "gate:mul";
    case Transform::GateAdd: return "gate:add";
  }
  return "?";
}

Transform parse_transform(const std::string& id)
{
  if (id == "shift") return Transform::Shift;
  if (id == "q3") return Transform::Quotient3;
  if (id == "dq4") return Transform::DiffQuotient4;
  if (id == "gate:mul") return Transform::GateMul;
  if (id == "gate:add") return Transform::GateAdd;
  throw PreconditionError("unknown transform '" + id + "' (shift, q3, dq4, gate:mul, gate:add)");
}

std::vector<std::string> output_variable_names(Transform t, std::span<const std::string> in,
                                               std::size_t gated)
{
  std::vector<std::string> out;
  switch (t) {
    case Transform::Shift:
      for (std::size_t i = 0; i < in.size(); ++i) out.push_back("y" + std::to_string(i + 1));
      for (std::size_t i = 0; i < in.size(); ++i) out.push_back("z" + std::to_string(i + 1));
      break;
    case Transform::Quotient3:
      for (std::size_t i = 0; i < 3 * in.size(); ++i) out.push_back("z" + std::to_string(i + 1));
      break;
    case Transform::DiffQuotient4:
      for (std::size_t i = 0; i < 4 * in.size(); ++i) out.push_back("z" + std::to_string(i + 1));
      break;
    case Transform::GateMul:
    case Transform::GateAdd:
      for (std::size_t i = 0; i < in.size(); ++i) {
        if (i == gated) {
          out.push_back("y1");
          out.push_back("y2");
        } else {
          out.push_back(in[i]);
        }
      }
      // keep names unique if the input already used y1/y2
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (i == gated || i == gated + 1) continue;
        if (out[i] == "y1" || out[i] == "y2") out[i] += "_";
      }
      break;
  }
  return out;
}

std::optional<bool> check_identity(const MultiPoly& input, const MultiPoly& output, Transform t,
                                   std::size_t gated, std::span<const Fraction> z)
{
  const Domain& d = input.domain();
  const std::size_t k = input.nvars();
  const unsigned deg = input.degree();
  std::vector<Fraction> x(k);
  Fraction factor = d.embed(d.one());
  switch (t) {
    case Transform::Shift:
      for (std::size_t i = 0; i < k; ++i) x[i] = d.add(z[i], z[k + i]);
      break;
    case Transform::Quotient3:
      for (std::size_t i = 0; i < k; ++i) {
        const Fraction& den = z[3 * i + 2];
        if (d.is_zero(den)) return std::nullopt;
        x[i] = d.div(d.sub(z[3 * i], z[3 * i + 1]), den);
        factor = d.mul(factor, den);
      }
      factor = d.pow(factor, deg);
      break;
    case Transform::DiffQuotient4:
      for (std::size_t i = 0; i < k; ++i) {
        const Fraction den = d.sub(z[4 * i + 2], z[4 * i + 3]);
        if (d.is_zero(den)) return std::nullopt;
        x[i] = d.div(d.sub(z[4 * i], z[4 * i + 1]), den);
        factor = d.mul(factor, den);
      }
      factor = d.pow(factor, deg);
      break;
    case Transform::GateMul:
    case Transform::GateAdd:
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t at = i < gated ? i : i + 1;
        if (i != gated) {
          x[i] = z[at];
        } else if (t == Transform::GateMul) {
          if (d.is_zero(z[i + 1])) return std::nullopt;
          x[i] = d.div(z[i], z[i + 1]);
          factor = d.pow(z[i + 1], deg);
        } else {
          x[i] = d.sub(z[i], z[i + 1]);
        }
      }
      break;
  }
  return output.eval(z) == d.mul(input.eval(std::span<const Fraction>(x)), factor);
}

ReductionReport reduce(const MultiPoly& p, Transform t, std::size_t gated, std::size_t samples)
{
  MultiPoly out = [&] {
    switch (t) {
      case Transform::Shift: return htp_shift(p);
      case Transform::Quotient3: return quotient3_homogenize(p);
      case Transform::DiffQuotient4: return diffquotient4_homogenize(p);
      case Transform::GateMul: return ratio_gate(p, GateMode::Multiplicative, gated);
      case Transform::GateAdd: return ratio_gate(p, GateMode::Additive, gated);
    }
    throw PreconditionError("unknown transform");
  }();
  ReductionReport report{p, out, t, gated, std::nullopt, false, false, 0};
  report.homogeneous_degree = is_homogeneous(out);
  report.translation_invariant = is_translation_invariant(out);

  Sampler sampler(p.domain(), 0xC0FFEE);
  std::vector<Fraction> point(out.nvars());
  bool ok = true;
  while (report.identity_samples < samples) {
    for (auto& v : point) v = sampler.nonzero_fraction(p.domain().is_integers() ? 9 : 2);
    auto result = check_identity(p, out, t, gated, point);
    if (!result) continue;
    ok = ok && *result;
    ++report.identity_samples;
  }
  report.identity_checked = ok;
  return report;
}

}  // namespace radocert
