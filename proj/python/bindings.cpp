#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include <radocert/certificate.hpp>
#include <radocert/cli.hpp>
#include <radocert/coloring.hpp>
#include <radocert/errors.hpp>
#include <radocert/linear_rado.hpp>
#include <radocert/reductions.hpp>
#include <radocert/syntax.hpp>
#include <radocert/window_search.hpp>

namespace py = pybind11;
using namespace radocert;

namespace {

py::object to_python(const Json& j)
{
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::object& obj)
{
  if (py::isinstance<py::str>(obj)) return Json::parse(obj.cast<std::string>());
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::list values(const Window& w, const std::vector<std::size_t>& indices)
{
  py::list out;
  for (std::size_t i : indices) out.append(w.domain().format(w[i]));
  return out;
}

DensityMode density_mode(const std::string& mode)
{
  if (mode == "add") return DensityMode::Additive;
  if (mode == "mul") return DensityMode::Multiplicative;
  throw PreconditionError("density mode must be 'add' or 'mul', got '" + mode + "'");
}

py::dict domain_info(const std::string& text)
{
  const Domain d = Domain::parse(text);
  py::dict out;
  out["name"] = d.name();
  out["q"] = d.is_integers() ? py::object(py::none()) : py::object(py::int_(d.q()));
  out["characteristic"] = d.characteristic();
  out["enumeration_scheme"] = d.enumeration_scheme();
  return out;
}

py::object parse(const std::string& domain, const std::string& text)
{
  const Domain d = Domain::parse(domain);
  return to_python(poly_to_json(parse_polynomial(d, text)));
}

py::object columns(const std::string& domain, const std::string& matrix, bool allow_large)
{
  const Domain d = Domain::parse(domain);
  ColumnsOptions options;
  options.allow_large = allow_large;
  const auto w = columns_condition(LinearSystem::parse(d, matrix), options);
  if (!w) return py::none();
  return to_python(witness_to_json(d, *w));
}

py::object window_check(const std::string& domain, const std::string& poly, const std::string& window,
                        std::size_t colors, bool injective)
{
  const Domain d = Domain::parse(domain);
  const NamedPoly p = parse_polynomial(d, poly);
  return to_python(window_certificate_to_json(check_window_l_pr(p.poly, Window::parse(d, window), colors, injective)));
}

py::dict semidecide(const std::string& domain, const std::string& poly, std::size_t colors, bool injective,
                    std::size_t budget)
{
  const Domain d = Domain::parse(domain);
  const SearchOutcome s = semidecide_l_pr(parse_polynomial(d, poly).poly, colors, injective, budget);
  py::dict out;
  out["certified"] = s.certified;
  out["windows_checked"] = s.windows_checked;
  out["certificate"] = to_python(window_certificate_to_json(s.certificate));
  return out;
}

py::object density(const std::string& domain, const std::string& poly, const std::string& window,
                   const std::string& delta, const std::string& mode, bool injective)
{
  const Domain d = Domain::parse(domain);
  const NamedPoly p = parse_polynomial(d, poly);
  return to_python(window_certificate_to_json(
      density_window_check(p.poly, Window::parse(d, window), parse_rational(delta), density_mode(mode), injective)));
}

py::dict roots(const std::string& domain, const std::string& poly, const std::string& window, bool injective)
{
  const Domain d = Domain::parse(domain);
  const Window w = Window::parse(d, window);
  const RootHypergraph h = enumerate_roots(parse_polynomial(d, poly).poly, w, injective);
  py::list tuples, edges;
  for (const auto& t : h.tuples) tuples.append(values(w, t));
  for (const auto& e : h.edges) edges.append(values(w, e));
  py::dict out;
  out["tuples"] = tuples;
  out["edges"] = edges;
  return out;
}

py::dict refute(const std::string& domain, const std::string& poly, const std::string& coloring,
                const std::string& window, bool injective)
{
  const Domain d = Domain::parse(domain);
  const Window w = Window::parse(d, window);
  const ScanResult r = refutation_scan(parse_polynomial(d, poly).poly, ColoringSpec::parse(d, coloring), w, injective);
  py::dict out;
  out["clean"] = r.clean;
  out["root"] = r.clean ? py::object(py::none()) : py::object(values(w, r.root));
  return out;
}

py::dict reduction(const std::string& domain, const std::string& poly, const std::string& transform,
                   const std::optional<std::string>& gate_var)
{
  const Domain d = Domain::parse(domain);
  const NamedPoly p = parse_polynomial(d, poly);
  const Transform t = parse_transform(transform);
  std::size_t gated = 0;
  if (gate_var) {
    auto it = std::find(p.variables.begin(), p.variables.end(), *gate_var);
    if (it == p.variables.end()) throw PreconditionError(*gate_var + " is not a variable");
    gated = static_cast<std::size_t>(it - p.variables.begin());
  }
  const ReductionReport r = reduce(p.poly, t, gated);
  const NamedPoly output{r.output, output_variable_names(t, p.variables, gated)};
  py::dict out;
  out["transform"] = to_string(t);
  out["output"] = output.to_string();
  out["variables"] = output.variables;
  out["homogeneous_degree"] = r.homogeneous_degree;
  out["translation_invariant"] = r.translation_invariant;
  out["identity_checked"] = r.identity_checked;
  out["identity_samples"] = r.identity_samples;
  return out;
}

py::tuple verify(const py::object& cert)
{
  const Verification v = verify_certificate(from_python(cert));
  return py::make_tuple(v.ok, v.reason);
}

py::tuple run_cli(const std::vector<std::string>& args)
{
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Exact Rado-type regularity checks over Z and F_q[t]";
  m.attr("__version__") = kToolVersion;

  // translators run newest-first, so derived types are registered last
  auto base = py::register_exception<Error>(m, "RadocertError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("domain_info", &domain_info, py::arg("domain"));
  m.def("parse_polynomial", &parse, py::arg("domain"), py::arg("text"));
  m.def("columns_condition", &columns, py::arg("domain"), py::arg("matrix"), py::arg("allow_large") = false,
        "Witness dict for the columns condition, or None.");
  m.def("check_window", &window_check, py::arg("domain"), py::arg("poly"), py::arg("window"),
        py::arg("colors") = 2, py::arg("injective") = false);
  m.def("semidecide", &semidecide, py::arg("domain"), py::arg("poly"), py::arg("colors") = 2,
        py::arg("injective") = false, py::arg("budget") = 16);
  m.def("density_check", &density, py::arg("domain"), py::arg("poly"), py::arg("window"), py::arg("delta"),
        py::arg("mode") = "add", py::arg("injective") = false);
  m.def("enumerate_roots", &roots, py::arg("domain"), py::arg("poly"), py::arg("window"),
        py::arg("injective") = false);
  m.def("refutation_scan", &refute, py::arg("domain"), py::arg("poly"), py::arg("coloring"), py::arg("window"),
        py::arg("injective") = false);
  m.def("reduce", &reduction, py::arg("domain"), py::arg("poly"), py::arg("transform"),
        py::arg("gate_var") = py::none());
  m.def("verify_certificate", &verify, py::arg("certificate"),
        "Checks a certificate dict or JSON string; returns (ok, reason).");
  m.def("run_cli", &run_cli, py::arg("args"), "Runs the command-line tool; returns (status, stdout, stderr).");
}
