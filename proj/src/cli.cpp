#include <radocert/cli.hpp>

#include <radocert/certificate.hpp>
#include <radocert/errors.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

namespace radocert::cli {

namespace {

struct Options {
  std::string domain = "Z";
  std::string poly;
  std::string vars;
  std::string matrix;
  std::string matrix_file;
  std::size_t max_columns = ColumnsOptions{}.max_columns;
  bool allow_large = false;
  std::size_t colors = 2;
  std::string delta;
  std::string mode = "add";
  bool injective = false;
  std::size_t budget = 16;
  std::string window;
  std::string coloring;
  std::string transform;
  std::string gate_var;
  std::size_t disjoint = 0;
  std::string out;
  std::string file;
};

// What a command hands back to the driver.
struct Outcome {
  int status = kExitDefinitive;
  Json certificate;  // null for commands that emit none
};

std::vector<std::string> split_names(const std::string& text)
{
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string join_elements(const Window& w, const std::vector<std::size_t>& idx)
{
  std::string s;
  for (std::size_t i : idx) s += (s.empty() ? "" : ", ") + w.domain().format(w[i]);
  return s;
}

class Session {
 public:
  Session(const Options& o, std::vector<std::string> command, std::ostream& out)
      : o_(o), command_(std::move(command)), out_(out), domain_(Domain::parse(o.domain))
  {
  }

  Outcome linear();
  Outcome search();
  Outcome window();
  Outcome density();
  Outcome roots();
  Outcome refute();
  Outcome reduce();

 private:
  NamedPoly polynomial() const
  {
    if (o_.poly.empty()) throw PreconditionError("--poly is required");
    return parse_polynomial(domain_, o_.poly, split_names(o_.vars));
  }
  Window window_arg() const
  {
    if (o_.window.empty()) throw PreconditionError("--window is required");
    return Window::parse(domain_, o_.window);
  }
  Json start(const std::string& check, Json subject) const
  {
    Json c = make_certificate(command_, domain_);
    c["check"] = check;
    c["subject"] = std::move(subject);
    return c;
  }
  static Json poly_subject(const NamedPoly& p) { return Json{{"polynomial", poly_to_json(p)}}; }
  void print_coloring(const WindowCertificate& c) const;

  const Options& o_;
  std::vector<std::string> command_;
  std::ostream& out_;
  Domain domain_;
};

void Session::print_coloring(const WindowCertificate& c) const
{
  for (std::uint32_t color = 0; color < c.colors; ++color) {
    std::vector<std::size_t> cls;
    for (std::size_t i = 0; i < c.coloring.size(); ++i)
      if (c.coloring[i] == color) cls.push_back(i);
    out_ << "  color " << color << ": {" << join_elements(c.window, cls) << "}\n";
  }
}

Outcome Session::linear()
{
  std::string text = o_.matrix;
  if (!o_.matrix_file.empty()) {
    std::ifstream in(o_.matrix_file);
    if (!in) throw PreconditionError("cannot read " + o_.matrix_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty()) throw PreconditionError("--matrix or --matrix-file is required");
  const LinearSystem a = LinearSystem::parse(domain_, text);
  ColumnsOptions options;
  options.max_columns = o_.max_columns;
  options.allow_large = o_.allow_large;
  const auto witness = columns_condition(a, options);

  Json cert = start("linear", Json{{"matrix", matrix_to_json(a)}});
  if (!witness) {
    out_ << "NoColumnsCondition\n";
    cert["verdict"] = "NoColumnsCondition";
    cert["payload"] = Json::object();
    return {kExitDefinitive, cert};
  }
  out_ << "ColumnsCondition\n";
  std::vector<std::size_t> prior;
  for (std::size_t j = 0; j < witness->cells.size(); ++j) {
    std::string cell;
    for (std::size_t c : witness->cells[j]) cell += (cell.empty() ? "" : ", ") + std::to_string(c + 1);
    out_ << "  C" << j + 1 << " = {" << cell << "}";
    if (j == 0) {
      out_ << "  column sum = 0";
    } else {
      std::string combo;
      for (std::size_t k = 0; k < prior.size(); ++k) {
        const Fraction& f = witness->combos[j - 1][k];
        if (domain_.is_zero(f.num)) continue;
        combo += (combo.empty() ? "" : " + ") + std::string("(") + domain_.format(f) + ")*a" +
                 std::to_string(prior[k] + 1);
      }
      out_ << "  column sum = " << (combo.empty() ? "0" : combo);
    }
    out_ << "\n";
    prior.insert(prior.end(), witness->cells[j].begin(), witness->cells[j].end());
    std::sort(prior.begin(), prior.end());
  }
  cert["verdict"] = "ColumnsCondition";
  cert["payload"] = Json{{"witness", witness_to_json(domain_, *witness)}};
  return {kExitDefinitive, cert};
}

Outcome Session::search()
{
  const NamedPoly p = polynomial();
  const SearchOutcome r = semidecide_l_pr(p.poly, o_.colors, o_.injective, o_.budget);
  const std::string verdict = r.certified ? "PartitionCertified" : "Exhausted";
  out_ << verdict << "\n";
  out_ << "  windows checked: " << r.windows_checked << "\n";
  out_ << "  window: " << r.certificate.window.describe() << " = {"
       << join_elements(r.certificate.window, [&] {
            std::vector<std::size_t> all(r.certificate.window.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            return all;
          }()) << "}\n";
  if (r.certified)
    out_ << "  every " << o_.colors << "-coloring of the window has a monochromatic"
         << (o_.injective ? " injective" : "") << " root\n";
  else if (!r.certificate.coloring.empty())
    print_coloring(r.certificate);

  Json cert = start("search", poly_subject(p));
  cert["verdict"] = verdict;
  cert["payload"] = Json{{"colors", o_.colors},
                         {"budget", o_.budget},
                         {"windows_checked", r.windows_checked},
                         {"certificate", window_certificate_to_json(r.certificate)}};
  return {r.certified ? kExitDefinitive : kExitInconclusive, cert};
}

Outcome Session::window()
{
  const NamedPoly p = polynomial();
  const Window w = window_arg();
  const WindowCertificate c = check_window_l_pr(p.poly, w, o_.colors, o_.injective);
  const std::string verdict = to_string(c.kind);
  out_ << verdict << "\n";
  if (c.kind == CertificateKind::PartitionColorable) {
    out_ << "  coloring without monochromatic" << (o_.injective ? " injective" : "") << " roots:\n";
    print_coloring(c);
  } else {
    out_ << "  every " << o_.colors << "-coloring of " << w.describe() << " has a monochromatic"
         << (o_.injective ? " injective" : "") << " root\n";
  }
  Json cert = start("window", poly_subject(p));
  cert["verdict"] = verdict;
  cert["payload"] = Json{{"certificate", window_certificate_to_json(c)}};
  return {kExitDefinitive, cert};
}

Outcome Session::density()
{
  const NamedPoly p = polynomial();
  const Window w = window_arg();
  if (o_.delta.empty()) throw PreconditionError("--delta is required");
  DensityMode mode;
  if (o_.mode == "add") mode = DensityMode::Additive;
  else if (o_.mode == "mul") mode = DensityMode::Multiplicative;
  else throw PreconditionError("--mode must be add or mul");
  const WindowCertificate c = density_window_check(p.poly, w, parse_rational(o_.delta), mode, o_.injective);
  const std::string verdict = to_string(c.kind);
  out_ << verdict << "\n";
  out_ << "  maximum root-free subset: " << c.avoider.size() << " of " << w.size() << " elements\n";
  out_ << "  avoider: {" << join_elements(w, c.avoider) << "}\n";
  out_ << "  delta*|window| = " << format_rational(c.delta * Rational(w.size())) << "\n";
  if (!c.transferable)
    out_ << "  note: the polynomial is not "
         << (mode == DensityMode::Additive ? "translation invariant" : "homogeneous")
         << "; the verdict applies to this window only\n";
  Json cert = start("density", poly_subject(p));
  cert["verdict"] = verdict;
  cert["payload"] = Json{{"certificate", window_certificate_to_json(c)}};
  return {kExitDefinitive, cert};
}

Outcome Session::roots()
{
  const NamedPoly p = polynomial();
  const Window w = window_arg();
  const RootHypergraph h = enumerate_roots(p.poly, w, o_.injective);
  out_ << "Roots\n";
  out_ << "  " << h.tuples.size() << " root tuples, " << h.edges.size() << " distinct value sets\n";
  Json tuples = Json::array();
  for (const auto& t : h.tuples) {
    out_ << "  (" << join_elements(w, t) << ")\n";
    Json row = Json::array();
    for (std::size_t i : t) row.push_back(domain_.format(w[i]));
    tuples.push_back(row);
  }
  Json payload{{"window", window_to_json(w)}, {"injective", o_.injective}, {"tuples", tuples}};
  if (o_.disjoint > 0) {
    const auto sols = disjoint_solutions(p.poly, w, o_.disjoint, o_.injective);
    if (sols) {
      out_ << "  " << o_.disjoint << " pairwise disjoint roots:";
      for (const auto& t : *sols) out_ << " (" << join_elements(w, t) << ")";
      out_ << "\n";
    } else {
      out_ << "  no " << o_.disjoint << " pairwise disjoint roots in the window\n";
    }
  }
  Json cert = start("roots", poly_subject(p));
  cert["verdict"] = "Roots";
  cert["payload"] = payload;
  return {kExitDefinitive, cert};
}

Outcome Session::refute()
{
  const NamedPoly p = polynomial();
  const Window w = window_arg();
  if (o_.coloring.empty()) throw PreconditionError("--coloring is required");
  const ColoringSpec spec = ColoringSpec::parse(domain_, o_.coloring);
  const ScanResult r = refutation_scan(p.poly, spec, w, o_.injective);
  Json payload{{"coloring", spec.describe(domain_)}, {"window", window_to_json(w)}, {"injective", o_.injective}};
  Json cert = start("refute", poly_subject(p));
  if (r.clean) {
    out_ << "Clean\n";
    out_ << "  no monochromatic root of " << p.to_string() << " under " << spec.describe(domain_)
         << " on " << w.describe() << "\n";
    cert["verdict"] = "Clean";
    cert["payload"] = payload;
    return {kExitInconclusive, cert};
  }
  const auto color = color_of(domain_, spec, w[r.root.front()]);
  out_ << "MonochromaticRoot\n";
  out_ << "  (" << join_elements(w, r.root) << "), all of color " << color << "\n";
  Json root = Json::array();
  for (std::size_t i : r.root) root.push_back(domain_.format(w[i]));
  payload["root"] = root;
  cert["verdict"] = "MonochromaticRoot";
  cert["payload"] = payload;
  return {kExitDefinitive, cert};
}

Outcome Session::reduce()
{
  const NamedPoly p = polynomial();
  if (o_.transform.empty()) throw PreconditionError("--transform is required");
  const Transform t = parse_transform(o_.transform);
  std::size_t gated = 0;
  if (!o_.gate_var.empty()) {
    auto it = std::find(p.variables.begin(), p.variables.end(), o_.gate_var);
    if (it == p.variables.end()) throw PreconditionError("--gate-var " + o_.gate_var + " is not a variable");
    gated = static_cast<std::size_t>(it - p.variables.begin());
  }
  const ReductionReport r = radocert::reduce(p.poly, t, gated);
  const NamedPoly output{r.output, output_variable_names(t, p.variables, gated)};
  out_ << "Reduction " << to_string(t) << "\n";
  out_ << "  output: " << output.to_string() << "\n";
  out_ << "  homogeneous: "
       << (r.homogeneous_degree ? "yes, degree " + std::to_string(*r.homogeneous_degree) : std::string("no"))
       << "\n";
  out_ << "  translation invariant: " << (r.translation_invariant ? "yes" : "no") << "\n";
  out_ << "  identity: " << (r.identity_checked ? "holds" : "FAILS") << " on " << r.identity_samples
       << " sample points\n";
  Json cert = start("reduce", poly_subject(p));
  cert["verdict"] = "Reduction";
  cert["payload"] = Json{
      {"transform", to_string(t)},
      {"gated_variable", gated},
      {"output", poly_to_json(output)},
      {"properties",
       {{"homogeneous_degree", r.homogeneous_degree ? Json(*r.homogeneous_degree) : Json(nullptr)},
        {"translation_invariant", r.translation_invariant},
        {"identity_checked", r.identity_checked},
        {"identity_samples", r.identity_samples}}}};
  return {r.identity_checked ? kExitDefinitive : kExitError, cert};
}

int verify_file(const std::string& path, std::ostream& out, std::ostream& err)
{
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return kExitError;
  }
  Json cert;
  try {
    cert = Json::parse(in);
  } catch (const Json::parse_error& e) {
    err << "error: " << path << " is not valid JSON: " << e.what() << "\n";
    return kExitError;
  }
  const Verification v = verify_certificate(cert);
  if (v.ok) {
    out << "verified: " << v.reason << "\n";
    return kExitDefinitive;
  }
  out << "rejected: " << v.reason << "\n";
  return kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Options o;
  CLI::App app{"Exact partition- and density-regularity checks for polynomial equations", "radocert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto domain = [&](CLI::App* s) { s->add_option("--domain", o.domain, "Z or GF(q)[t]")->capture_default_str(); };
  auto poly = [&](CLI::App* s) {
    s->add_option("--poly", o.poly, "polynomial, e.g. \"x+y-z\"")->required();
    s->add_option("--vars", o.vars, "comma-separated variable order (default: natural order of names)");
  };
  auto window = [&](CLI::App* s) {
    s->add_option("--window", o.window, "1..N, prefix:N or list:a,b,...")->required();
  };
  auto injective = [&](CLI::App* s) { s->add_flag("--injective", o.injective, "only roots with distinct coordinates"); };
  auto output = [&](CLI::App* s) { s->add_option("--out", o.out, "write the certificate to FILE ('-' for stdout)"); };

  auto* linear = app.add_subcommand("linear", "decide the columns condition of A x = 0");
  domain(linear);
  linear->add_option("--matrix", o.matrix, "rows separated by ';', entries by spaces or ','");
  linear->add_option("--matrix-file", o.matrix_file, "read the matrix from a file");
  linear->add_option("--max-columns", o.max_columns, "refuse larger systems unless --allow-large")->capture_default_str();
  linear->add_flag("--allow-large", o.allow_large, "search systems above --max-columns");
  output(linear);

  auto* search = app.add_subcommand("search", "search prefix windows for an l-coloring certificate");
  domain(search);
  poly(search);
  search->add_option("--colors", o.colors, "number of colors l")->capture_default_str();
  search->add_option("--budget", o.budget, "largest prefix window to try")->capture_default_str();
  injective(search);
  output(search);

  auto* win = app.add_subcommand("window", "check every l-coloring of one window");
  domain(win);
  poly(win);
  window(win);
  win->add_option("--colors", o.colors, "number of colors l")->capture_default_str();
  injective(win);
  output(win);

  auto* density = app.add_subcommand("density", "maximum root-free subset of a window against delta");
  domain(density);
  poly(density);
  window(density);
  density->add_option("--delta", o.delta, "density threshold P/Q or decimal in (0, 1]")->required();
  density->add_option("--mode", o.mode, "add or mul")->check(CLI::IsMember({"add", "mul"}))->capture_default_str();
  injective(density);
  output(density);

  auto* roots = app.add_subcommand("roots", "list the roots of a polynomial inside a window");
  domain(roots);
  poly(roots);
  window(roots);
  roots->add_option("--disjoint", o.disjoint, "also find T roots with pairwise disjoint value sets");
  injective(roots);
  output(roots);

  auto* refute = app.add_subcommand("refute", "scan a window for a monochromatic root under a coloring");
  domain(refute);
  poly(refute);
  window(refute);
  refute->add_option("--coloring", o.coloring, "basep:P[:msd][:signed] or ordmod:PRIME:M")->required();
  injective(refute);
  output(refute);

  auto* reduce = app.add_subcommand("reduce", "apply a polynomial transform and check its properties");
  domain(reduce);
  poly(reduce);
  reduce->add_option("--transform", o.transform, "shift, q3, dq4, gate:mul or gate:add")->required();
  reduce->add_option("--gate-var", o.gate_var, "variable replaced by a gate (default: the first)");
  output(reduce);

  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("file", o.file, "certificate file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitDefinitive : kExitError;
  }

  try {
    if (verify->parsed()) return verify_file(o.file, out, err);

    std::vector<std::string> command{"radocert"};
    command.insert(command.end(), args.begin(), args.end());
    Session session(o, command, out);
    const auto started = std::chrono::steady_clock::now();
    Outcome result;
    if (linear->parsed()) result = session.linear();
    else if (search->parsed()) result = session.search();
    else if (win->parsed()) result = session.window();
    else if (density->parsed()) result = session.density();
    else if (roots->parsed()) result = session.roots();
    else if (refute->parsed()) result = session.refute();
    else result = session.reduce();
    const auto elapsed = std::chrono::steady_clock::now() - started;

    if (!o.out.empty() && !result.certificate.is_null()) {
      seal_certificate(result.certificate);
      result.certificate["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(elapsed).count();
      const std::string text = result.certificate.dump(2) + "\n";
      if (o.out == "-") {
        out << text;
      } else {
        std::ofstream file(o.out);
        if (!file) throw PreconditionError("cannot write " + o.out);
        file << text;
      }
    }
    return result.status;
  } catch (const ParseError& e) {
    err << "error: " << e.message() << "\n" << e.annotated() << "\n";
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace radocert::cli
