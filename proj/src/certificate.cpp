#include <radocert/certificate.hpp>

#include <radocert/errors.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace radocert {

namespace {

Json elements_to_json(const Domain& d, const std::vector<Element>& v)
{
  Json out = Json::array();
  for (const auto& e : v) out.push_back(d.format(e));
  return out;
}

std::vector<Element> elements_from_json(const Domain& d, const Json& j)
{
  std::vector<Element> out;
  for (const auto& e : j) out.push_back(parse_element(d, e.get<std::string>()));
  return out;
}

Json indices_to_elements(const Window& w, const std::vector<std::size_t>& idx)
{
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(w.domain().format(w[i]));
  return out;
}

std::vector<std::size_t> elements_to_indices(const Window& w, const Json& j)
{
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    auto i = w.index_of(parse_element(w.domain(), e.get<std::string>()));
    if (!i) throw PreconditionError("element " + e.get<std::string>() + " is not in the window");
    out.push_back(*i);
  }
  return out;
}

std::string sha256_hex(const std::string& data)
{
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

Verification pass(std::string why) { return {true, std::move(why)}; }
Verification fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

// ---------------------------------------------------------------------------
// encodings

Json poly_to_json(const NamedPoly& p)
{
  const Domain& d = p.poly.domain();
  Json terms = Json::array();
  for (const auto& [e, c] : p.poly.terms())
    terms.push_back(Json{{"coefficient", d.format(c)}, {"exponents", e}});
  return Json{{"text", p.to_string()}, {"variables", p.variables}, {"terms", terms}};
}

NamedPoly poly_from_json(const Domain& d, const Json& j)
{
  auto vars = j.at("variables").get<std::vector<std::string>>();
  if (vars.empty()) throw PreconditionError("polynomial without variables");
  MultiPoly p(d, vars.size());
  std::set<Exponents> seen;
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exponents").get<Exponents>();
    if (!seen.insert(e).second) throw PreconditionError("repeated monomial in polynomial terms");
    const Element c = parse_element(d, t.at("coefficient").get<std::string>());
    if (d.is_zero(c)) throw PreconditionError("zero coefficient stored in polynomial terms");
    p.add_term(e, c);
  }
  return {std::move(p), std::move(vars)};
}

Json matrix_to_json(const LinearSystem& a)
{
  Json rows = Json::array();
  for (const auto& r : a.entries()) rows.push_back(elements_to_json(a.domain(), r));
  return rows;
}

LinearSystem matrix_from_json(const Domain& d, const Json& j)
{
  std::vector<std::vector<Element>> rows;
  for (const auto& r : j) rows.push_back(elements_from_json(d, r));
  return LinearSystem(d, std::move(rows));
}

Json window_to_json(const Window& w)
{
  return Json{{"description", w.describe()}, {"elements", elements_to_json(w.domain(), w.elements())}};
}

Window window_from_json(const Domain& d, const Json& j)
{
  Window w = Window::parse(d, j.at("description").get<std::string>());
  if (w.elements() != elements_from_json(d, j.at("elements")))
    throw PreconditionError("window elements do not match the window description");
  return w;
}

Json witness_to_json(const Domain& d, const ColumnsWitness& w)
{
  Json cells = Json::array();
  for (const auto& cell : w.cells) {
    Json c = Json::array();
    for (std::size_t i : cell) c.push_back(i + 1);
    cells.push_back(c);
  }
  Json combos = Json::array();
  for (const auto& combo : w.combos) {
    Json c = Json::array();
    for (const auto& f : combo) c.push_back(d.format(f));
    combos.push_back(c);
  }
  return Json{{"cells", cells}, {"combos", combos}};
}

ColumnsWitness witness_from_json(const Domain& d, const Json& j)
{
  ColumnsWitness w;
  for (const auto& cell : j.at("cells")) {
    std::vector<std::size_t> c;
    for (const auto& i : cell) {
      const auto v = i.get<long long>();
      if (v < 1) throw PreconditionError("column numbers start at 1");
      c.push_back(static_cast<std::size_t>(v - 1));
    }
    w.cells.push_back(std::move(c));
  }
  for (const auto& combo : j.at("combos")) {
    std::vector<Fraction> c;
    for (const auto& f : combo) c.push_back(parse_fraction(d, f.get<std::string>()));
    w.combos.push_back(std::move(c));
  }
  return w;
}

Json window_certificate_to_json(const WindowCertificate& c)
{
  Json j{{"kind", to_string(c.kind)}, {"window", window_to_json(c.window)}, {"injective", c.injective}};
  switch (c.kind) {
    case CertificateKind::PartitionCertified:
      j["colors"] = c.colors;
      break;
    case CertificateKind::PartitionColorable:
      j["colors"] = c.colors;
      j["coloring"] = c.coloring;
      break;
    case CertificateKind::DensityCertified:
    case CertificateKind::DensityAvoider:
      j["delta"] = format_rational(c.delta);
      j["mode"] = to_string(c.mode);
      j["transferable"] = c.transferable;
      j["max_avoider_size"] = c.avoider.size();
      j["avoider"] = indices_to_elements(c.window, c.avoider);
      break;
  }
  j["enumeration_scheme"] = c.enumeration_scheme;
  j["tool_version"] = c.tool_version;
  return j;
}

WindowCertificate window_certificate_from_json(const Domain& d, const Json& j)
{
  WindowCertificate c;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "PartitionCertified") c.kind = CertificateKind::PartitionCertified;
  else if (kind == "PartitionColorable") c.kind = CertificateKind::PartitionColorable;
  else if (kind == "DensityCertified") c.kind = CertificateKind::DensityCertified;
  else if (kind == "DensityAvoider") c.kind = CertificateKind::DensityAvoider;
  else throw PreconditionError("unknown certificate kind '" + kind + "'");
  c.window = window_from_json(d, j.at("window"));
  c.injective = j.at("injective").get<bool>();
  if (j.contains("colors")) c.colors = j.at("colors").get<std::size_t>();
  if (j.contains("coloring")) c.coloring = j.at("coloring").get<std::vector<std::uint32_t>>();
  if (j.contains("delta")) c.delta = parse_rational(j.at("delta").get<std::string>());
  if (j.contains("mode")) {
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "additive") c.mode = DensityMode::Additive;
    else if (mode == "multiplicative") c.mode = DensityMode::Multiplicative;
    else throw PreconditionError("unknown density mode '" + mode + "'");
  }
  if (j.contains("transferable")) c.transferable = j.at("transferable").get<bool>();
  if (j.contains("avoider")) {
    c.avoider = elements_to_indices(c.window, j.at("avoider"));
    if (j.at("max_avoider_size").get<std::size_t>() != c.avoider.size())
      throw PreconditionError("max_avoider_size does not match the avoider");
  }
  c.enumeration_scheme = j.value("enumeration_scheme", std::string());
  c.tool_version = j.value("tool_version", std::string());
  return c;
}

// ---------------------------------------------------------------------------

Json make_certificate(const std::vector<std::string>& command, const Domain& domain)
{
  return Json{{"format", kCertificateFormat},
              {"schema_version", kCertificateSchemaVersion},
              {"tool_version", kToolVersion},
              {"command", command},
              {"domain", domain.name()},
              {"enumeration_scheme", domain.enumeration_scheme()}};
}

std::string certificate_digest(const Json& cert)
{
  Json body = cert;
  body.erase("digest");
  body.erase("elapsed_ms");
  return "sha256:" + sha256_hex(body.dump());
}

void seal_certificate(Json& cert) { cert["digest"] = certificate_digest(cert); }

// ---------------------------------------------------------------------------
// verification

namespace {

Verification verify_partition(const NamedPoly& p, const WindowCertificate& c)
{
  if (c.colors == 0) return fail("number of colors must be positive");
  if (c.kind == CertificateKind::PartitionColorable) {
    if (c.coloring.size() != c.window.size()) return fail("coloring does not cover the window");
    for (auto col : c.coloring)
      if (col >= c.colors) return fail("coloring uses a color outside 0.." + std::to_string(c.colors - 1));
    const RootHypergraph h = enumerate_roots(p.poly, c.window, c.injective);
    for (const auto& e : h.edges) {
      bool mono = true;
      for (std::size_t v : e) mono = mono && c.coloring[v] == c.coloring[e.front()];
      if (mono) {
        std::string roots;
        for (std::size_t v : e) roots += (roots.empty() ? "" : ", ") + c.window.domain().format(c.window[v]);
        return fail("monochromatic root with values {" + roots + "}");
      }
    }
    return pass("coloring has no monochromatic root");
  }
  if (c.kind == CertificateKind::PartitionCertified) {
    const WindowCertificate again = check_window_l_pr(p.poly, c.window, c.colors, c.injective);
    if (again.kind != CertificateKind::PartitionCertified)
      return fail("window admits a coloring without monochromatic roots");
    return pass("every " + std::to_string(c.colors) + "-coloring of the window has a monochromatic root");
  }
  return fail("not a partition certificate");
}

Verification verify_density(const NamedPoly& p, const WindowCertificate& c)
{
  if (c.delta <= 0 || c.delta > 1) return fail("delta outside (0, 1]");
  const Rational threshold = c.delta * Rational(c.window.size());
  const bool structural = c.mode == DensityMode::Additive ? is_translation_invariant(p.poly)
                                                          : is_homogeneous(p.poly).has_value();
  if (structural != c.transferable) return fail("transferable flag does not match the polynomial");
  const RootHypergraph h = enumerate_roots(p.poly, c.window, c.injective);
  std::vector<bool> in(c.window.size(), false);
  for (std::size_t v : c.avoider) {
    if (in[v]) return fail("avoider lists an element twice");
    in[v] = true;
  }
  for (const auto& e : h.edges)
    if (std::all_of(e.begin(), e.end(), [&](std::size_t v) { return in[v]; }))
      return fail("avoider contains a root");
  if (c.kind == CertificateKind::DensityAvoider) {
    if (Rational(c.avoider.size()) < threshold) return fail("avoider is smaller than delta*|window|");
    return pass("avoider of size " + std::to_string(c.avoider.size()) + " contains no root");
  }
  if (c.kind == CertificateKind::DensityCertified) {
    const auto best = maximum_avoiding_subset(c.window.size(), h.edges);
    if (best.size() != c.avoider.size()) return fail("recorded maximum avoider size is wrong");
    if (!(Rational(best.size()) < threshold)) return fail("maximum avoider reaches delta*|window|");
    return pass("maximum avoider has size " + std::to_string(best.size()) + " < delta*|window|");
  }
  return fail("not a density certificate");
}

Verification verify_body(const Json& cert)
{
  const Domain domain = Domain::parse(cert.at("domain").get<std::string>());
  if (cert.at("enumeration_scheme").get<std::string>() != domain.enumeration_scheme())
    return fail("unknown enumeration scheme");
  const auto check = cert.at("check").get<std::string>();
  const auto verdict = cert.at("verdict").get<std::string>();
  const Json& payload = cert.at("payload");

  if (check == "linear") {
    const LinearSystem a = matrix_from_json(domain, cert.at("subject").at("matrix"));
    if (verdict == "ColumnsCondition") {
      const ColumnsWitness w = witness_from_json(domain, payload.at("witness"));
      if (!verify_witness(a, w)) return fail("witness equations do not hold");
      return pass("witness satisfies the columns condition");
    }
    if (verdict == "NoColumnsCondition") {
      ColumnsOptions options;
      options.allow_large = true;
      if (columns_condition(a, options)) return fail("the matrix does satisfy the columns condition");
      return pass("no ordered partition satisfies the columns condition");
    }
    return fail("unknown verdict '" + verdict + "'");
  }

  const NamedPoly p = poly_from_json(domain, cert.at("subject").at("polynomial"));

  if (check == "window" || check == "search") {
    const WindowCertificate c = window_certificate_from_json(domain, payload.at("certificate"));
    if (check == "search") {
      if (c.window.provenance() != Window::Provenance::EnumerationPrefix)
        return fail("search certificates use enumeration-prefix windows");
      const bool certified = verdict == "PartitionCertified";
      if (!certified && verdict != "Exhausted") return fail("unknown verdict '" + verdict + "'");
      if (certified != (c.kind == CertificateKind::PartitionCertified))
        return fail("verdict does not match the window certificate");
    } else if (verdict != to_string(c.kind)) {
      return fail("verdict does not match the window certificate");
    }
    return verify_partition(p, c);
  }
  if (check == "density") {
    const WindowCertificate c = window_certificate_from_json(domain, payload.at("certificate"));
    if (verdict != to_string(c.kind)) return fail("verdict does not match the window certificate");
    return verify_density(p, c);
  }
  if (check == "roots") {
    const Window w = window_from_json(domain, payload.at("window"));
    const bool injective = payload.at("injective").get<bool>();
    const RootHypergraph h = enumerate_roots(p.poly, w, injective);
    Json tuples = Json::array();
    for (const auto& t : h.tuples) tuples.push_back(indices_to_elements(w, t));
    if (tuples != payload.at("tuples")) return fail("root tuples differ from a fresh enumeration");
    return pass(std::to_string(h.tuples.size()) + " root tuples confirmed");
  }
  if (check == "refute") {
    const Window w = window_from_json(domain, payload.at("window"));
    const bool injective = payload.at("injective").get<bool>();
    const ColoringSpec spec = ColoringSpec::parse(domain, payload.at("coloring").get<std::string>());
    if (verdict == "MonochromaticRoot") {
      const auto root = elements_to_indices(w, payload.at("root"));
      if (root.size() != p.poly.nvars()) return fail("root has the wrong arity");
      std::vector<Element> point;
      for (std::size_t i : root) point.push_back(w[i]);
      if (!domain.is_zero(p.poly.eval(point))) return fail("recorded root is not a root");
      std::set<std::size_t> distinct(root.begin(), root.end());
      if (injective && distinct.size() != root.size()) return fail("recorded root is not injective");
      const auto color = color_of(domain, spec, point.front());
      for (const auto& x : point)
        if (color_of(domain, spec, x) != color) return fail("recorded root is not monochromatic");
      return pass("monochromatic root confirmed");
    }
    if (verdict == "Clean") {
      if (!refutation_scan(p.poly, spec, w, injective).clean) return fail("window has a monochromatic root");
      return pass("no monochromatic root in the window");
    }
    return fail("unknown verdict '" + verdict + "'");
  }
  if (check == "reduce") {
    const Transform t = parse_transform(payload.at("transform").get<std::string>());
    const auto gated = payload.at("gated_variable").get<std::size_t>();
    const NamedPoly recorded = poly_from_json(domain, payload.at("output"));
    const ReductionReport r = reduce(p.poly, t, gated, 16);
    if (!(r.output == recorded.poly)) return fail("output differs from the transform of the input");
    const Json& props = payload.at("properties");
    const Json degree = r.homogeneous_degree ? Json(*r.homogeneous_degree) : Json(nullptr);
    if (props.at("homogeneous_degree") != degree) return fail("homogeneity claim does not re-verify");
    if (props.at("translation_invariant").get<bool>() != r.translation_invariant)
      return fail("translation-invariance claim does not re-verify");
    if (props.at("identity_checked").get<bool>() && !r.identity_checked)
      return fail("defining identity fails");
    return pass("transform output and properties re-verified");
  }
  return fail("unknown check '" + check + "'");
}

}  // namespace

Verification verify_certificate(const Json& cert)
{
  if (!cert.is_object() || cert.value("format", std::string()) != kCertificateFormat)
    throw SchemaError("not a radocert certificate");
  if (!cert.contains("schema_version") || !cert.at("schema_version").is_number_integer() ||
      cert.at("schema_version").get<int>() != kCertificateSchemaVersion)
    throw SchemaError("unsupported certificate schema version (this tool reads version " +
                      std::to_string(kCertificateSchemaVersion) + ")");
  if (!cert.contains("digest") || !cert.at("digest").is_string())
    return fail("certificate is not sealed (no digest)");
  if (cert.at("digest").get<std::string>() != certificate_digest(cert))
    return fail("digest mismatch: the certificate was modified after it was issued");
  try {
    return verify_body(cert);
  } catch (const SchemaError&) {
    throw;
  } catch (const Json::exception& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace radocert
