#include <radocert/window_search.hpp>

#include <radocert/errors.hpp>
#include <radocert/syntax.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace radocert {

// ---------------------------------------------------------------------------
// Window

Window::Window(Domain domain, std::vector<Element> elements, Provenance provenance)
    : domain_(std::move(domain)), elements_(std::move(elements)), provenance_(provenance)
{
  sorted_.resize(elements_.size());
  std::iota(sorted_.begin(), sorted_.end(), 0);
  std::sort(sorted_.begin(), sorted_.end(),
            [&](std::size_t a, std::size_t b) { return elements_[a] < elements_[b]; });
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (domain_.is_zero(elements_[i])) throw PreconditionError("a window may not contain 0");
    if (i > 0 && elements_[sorted_[i - 1]] == elements_[sorted_[i]])
      throw PreconditionError("window contains " + domain_.format(elements_[sorted_[i]]) + " twice");
  }
}

Window Window::prefix(const Domain& domain, std::size_t k)
{
  std::vector<Element> elements;
  elements.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) elements.push_back(domain.enumerate(Integer(i)));
  return Window(domain, std::move(elements), Provenance::EnumerationPrefix);
}

Window Window::interval(const Integer& a, const Integer& b)
{
  if (a > b) throw PreconditionError("empty interval " + a.str() + ".." + b.str());
  if (a <= 0 && b >= 0) throw PreconditionError("interval " + a.str() + ".." + b.str() + " contains 0");
  if (b - a >= 1'000'000) throw PreconditionError("interval too large");
  std::vector<Element> elements;
  for (Integer v = a; v <= b; ++v) elements.emplace_back(v);
  return Window(Domain::integers(), std::move(elements), Provenance::IntegerInterval);
}

Window Window::list(const Domain& domain, std::vector<Element> elements)
{
  return Window(domain, std::move(elements), Provenance::ExplicitList);
}

Window Window::parse(const Domain& domain, const std::string& text)
{
  auto fail = [&](const std::string& msg, std::size_t pos = 0) -> Window {
    throw ParseError(msg, text, pos);
  };
  auto parse_count = [&](const std::string& s, std::size_t pos) {
    if (s.empty() || s.size() > 9 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected a window size", text, pos);
    return static_cast<std::size_t>(std::stoul(s));
  };
  try {
    if (text.rfind("prefix:", 0) == 0) return prefix(domain, parse_count(text.substr(7), 7));
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      if (!domain.is_integers()) return fail("intervals are only defined over Z; use prefix:N");
      Element a, b;
      try {
        a = parse_element(domain, text.substr(0, dots));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), text, e.position());
      }
      try {
        b = parse_element(domain, text.substr(dots + 2));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), text, dots + 2 + e.position());
      }
      return interval(a.integer(), b.integer());
    }
    std::size_t start = text.rfind("list:", 0) == 0 ? 5 : 0;
    std::vector<Element> elements;
    std::size_t i = start;
    while (i <= text.size()) {
      std::size_t j = text.find(',', i);
      if (j == std::string::npos) j = text.size();
      try {
        elements.push_back(parse_element(domain, text.substr(i, j - i)));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), text, i + e.position());
      }
      i = j + 1;
    }
    return list(domain, std::move(elements));
  } catch (const PreconditionError& e) {
    return fail(e.what());
  }
}

std::string Window::describe() const
{
  switch (provenance_) {
    case Provenance::EnumerationPrefix:
      return "prefix:" + std::to_string(elements_.size());
    case Provenance::IntegerInterval:
      if (!elements_.empty())
        return domain_.format(elements_.front()) + ".." + domain_.format(elements_.back());
      break;
    case Provenance::ExplicitList:
      break;
  }
  std::string out = "list:";
  for (std::size_t i = 0; i < elements_.size(); ++i) out += (i ? "," : "") + domain_.format(elements_[i]);
  return out;
}

std::optional<std::size_t> Window::index_of(const Element& e) const
{
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), e,
                             [&](std::size_t i, const Element& v) { return elements_[i] < v; });
  if (it == sorted_.end() || !(elements_[*it] == e)) return std::nullopt;
  return *it;
}

// ---------------------------------------------------------------------------
// roots

namespace {

bool distinct(const std::vector<std::size_t>& t)
{
  std::vector<std::size_t> s = t;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

void finish_edges(RootHypergraph& h)
{
  std::set<std::vector<std::size_t>> edges;
  for (const auto& t : h.tuples) {
    std::vector<std::size_t> e = t;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    edges.insert(std::move(e));
  }
  h.edges.assign(edges.begin(), edges.end());
}

void check_domains(const MultiPoly& p, const Window& w)
{
  if (!(p.domain() == w.domain()))
    throw PreconditionError("polynomial over " + p.domain().name() + ", window over " +
                            w.domain().name());
}

}  // namespace

RootHypergraph enumerate_roots_naive(const MultiPoly& p, const Window& w, bool injective)
{
  check_domains(p, w);
  RootHypergraph h;
  h.injective = injective;
  const std::size_t n = p.nvars();
  const std::size_t size = w.size();
  if (size == 0) return h;
  std::vector<std::size_t> idx(n, 0);
  std::vector<Element> point(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) point[i] = w[idx[i]];
    if (p.domain().is_zero(p.eval(point)) && (!injective || distinct(idx))) h.tuples.push_back(idx);
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == size) idx[--k] = 0;
    if (k == 0) break;
  }
  finish_edges(h);
  return h;
}

RootHypergraph enumerate_roots(const MultiPoly& p, const Window& w, bool injective)
{
  check_domains(p, w);
  const Domain& d = p.domain();
  RootHypergraph h;
  h.injective = injective;
  const std::size_t n = p.nvars();
  const std::size_t size = w.size();
  if (size == 0 || n == 0) return h;

  // Partial evaluation: fix x_0..x_{n-2}, leaving a univariate polynomial in
  // the last variable; solve it directly when it is linear.
  const std::size_t last = n - 1;
  std::vector<unsigned> top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = p.degree_in(i);
  std::vector<std::vector<std::vector<Element>>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].resize(size);
    for (std::size_t j = 0; j < size; ++j) {
      powers[i][j].push_back(d.one());
      for (unsigned k = 1; k <= top[i]; ++k) powers[i][j].push_back(d.mul(powers[i][j].back(), w[j]));
    }
  }

  std::vector<std::size_t> idx(n, 0);
  std::vector<Element> coeff(top[last] + 1);
  while (true) {
    const std::vector<std::size_t> prefix_idx(idx.begin(), idx.begin() + static_cast<long>(last));
    if (!injective || distinct(prefix_idx)) {
      std::fill(coeff.begin(), coeff.end(), d.zero());
      for (const auto& [e, c] : p.terms()) {
        Element v = c;
        for (std::size_t i = 0; i < last; ++i)
          if (e[i] != 0) v = d.mul(v, powers[i][idx[i]][e[i]]);
        coeff[e[last]] = d.add(coeff[e[last]], v);
      }
      long effective = -1;
      for (std::size_t k = coeff.size(); k-- > 0;)
        if (!d.is_zero(coeff[k])) {
          effective = static_cast<long>(k);
          break;
        }
      auto emit = [&](std::size_t j) {
        idx[last] = j;
        if (!injective || distinct(idx)) h.tuples.push_back(idx);
      };
      if (effective < 0) {
        for (std::size_t j = 0; j < size; ++j) emit(j);
      } else if (effective == 1) {
        if (d.divides(coeff[1], coeff[0])) {
          const Element x = d.neg(d.exact_div(coeff[0], coeff[1]));
          if (auto j = w.index_of(x)) emit(*j);
        }
      } else if (effective > 1) {
        for (std::size_t j = 0; j < size; ++j) {
          Element v = d.zero();
          for (std::size_t k = 0; k <= static_cast<std::size_t>(effective); ++k)
            if (!d.is_zero(coeff[k])) v = d.add(v, d.mul(coeff[k], powers[last][j][k]));
          if (d.is_zero(v)) emit(j);
        }
      }
    }
    idx[last] = 0;
    std::size_t k = last;
    while (k > 0 && ++idx[k - 1] == size) idx[--k] = 0;
    if (k == 0) break;
  }
  finish_edges(h);
  return h;
}

// ---------------------------------------------------------------------------
// partition checks

std::string to_string(CertificateKind kind)
{
  switch (kind) {
    case CertificateKind::PartitionCertified: return "PartitionCertified";
    case CertificateKind::PartitionColorable: return "PartitionColorable";
    case CertificateKind::DensityCertified: return "DensityCertified";
    case CertificateKind::DensityAvoider: return "DensityAvoider";
  }
  return "?";
}

std::string to_string(DensityMode mode)
{
  return mode == DensityMode::Additive ? "additive" : "multiplicative";
}

bool has_monochromatic_edge(const std::vector<std::vector<std::size_t>>& edges,
                            const std::vector<std::uint32_t>& coloring)
{
  for (const auto& e : edges) {
    bool mono = true;
    for (std::size_t v : e) mono = mono && coloring.at(v) == coloring.at(e.front());
    if (mono) return true;
  }
  return false;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(std::size_t vertices, const std::vector<std::vector<std::size_t>>& edges,
                 std::size_t colors)
      : n_(vertices), colors_(colors), closing_(vertices), coloring_(vertices, 0)
  {
    for (const auto& e : edges) {
      if (e.empty()) continue;
      closing_[*std::max_element(e.begin(), e.end())].push_back(&e);
    }
  }

  std::optional<std::vector<std::uint32_t>> run()
  {
    if (n_ == 0) return coloring_;
    if (colors_ == 0) return std::nullopt;
    if (assign(0, 0)) return coloring_;
    return std::nullopt;
  }

 private:
  // Colors are tried in increasing order and a vertex may open at most one new
  // color, so the first complete assignment is the lexicographically least.
  bool assign(std::size_t v, std::uint32_t used)
  {
    if (v == n_) return true;
    const std::uint32_t limit = static_cast<std::uint32_t>(std::min<std::size_t>(colors_, used + 1));
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (closes_monochromatic(v, c)) continue;
      coloring_[v] = c;
      if (assign(v + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  bool closes_monochromatic(std::size_t v, std::uint32_t c) const
  {
    for (const auto* e : closing_[v]) {
      bool mono = true;
      for (std::size_t u : *e)
        if (u != v && coloring_[u] != c) {
          mono = false;
          break;
        }
      if (mono) return true;
    }
    return false;
  }

  std::size_t n_;
  std::size_t colors_;
  std::vector<std::vector<const std::vector<std::size_t>*>> closing_;
  std::vector<std::uint32_t> coloring_;
};

}  // namespace

std::optional<std::vector<std::uint32_t>> least_proper_coloring(
    std::size_t vertices, const std::vector<std::vector<std::size_t>>& edges, std::size_t colors)
{
  return ColoringSearch(vertices, edges, colors).run();
}

WindowCertificate check_window_l_pr(const MultiPoly& p, const Window& w, std::size_t colors,
                                    bool injective)
{
  if (colors == 0) throw PreconditionError("number of colors must be at least 1");
  const RootHypergraph h = enumerate_roots(p, w, injective);
  WindowCertificate cert;
  cert.window = w;
  cert.injective = injective;
  cert.colors = colors;
  cert.enumeration_scheme = w.domain().enumeration_scheme();
  auto coloring = least_proper_coloring(w.size(), h.edges, colors);
  if (coloring) {
    cert.kind = CertificateKind::PartitionColorable;
    cert.coloring = std::move(*coloring);
  } else {
    cert.kind = CertificateKind::PartitionCertified;
  }
  return cert;
}

SearchOutcome semidecide_l_pr(const MultiPoly& p, std::size_t colors, bool injective,
                              std::size_t budget)
{
  if (budget == 0) throw PreconditionError("budget must be at least 1");
  SearchOutcome out;
  for (std::size_t k = 1; k <= budget; ++k) {
    WindowCertificate cert = check_window_l_pr(p, Window::prefix(p.domain(), k), colors, injective);
    out.windows_checked = k;
    out.certificate = std::move(cert);
    if (out.certificate.kind == CertificateKind::PartitionCertified) {
      out.certified = true;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// density

namespace {

class AvoiderSearch {
 public:
  AvoiderSearch(std::size_t vertices, const std::vector<std::vector<std::size_t>>& edges)
      : n_(vertices), edges_(edges), closing_(vertices), state_(vertices, State::Undecided)
  {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].empty()) continue;
      closing_[*std::max_element(edges_[i].begin(), edges_[i].end())].push_back(i);
    }
  }

  std::vector<std::size_t> run()
  {
    branch(0, 0);
    return best_;
  }

 private:
  enum class State { Undecided, In, Out };

  bool can_include(std::size_t v) const
  {
    for (std::size_t ei : closing_[v]) {
      bool others_in = true;
      for (std::size_t u : edges_[ei])
        if (u != v && state_[u] != State::In) {
          others_in = false;
          break;
        }
      if (others_in) return false;
    }
    return true;
  }

  // chosen + undecided - (number of pairwise disjoint live edges): every live
  // edge must lose one of its undecided vertices.
  std::size_t upper_bound(std::size_t v, std::size_t chosen) const
  {
    std::vector<bool> taken(n_, false);
    std::size_t disjoint = 0;
    for (const auto& e : edges_) {
      bool live = true, has_undecided = false, clash = false;
      for (std::size_t u : e) {
        if (state_[u] == State::Out) live = false;
        if (u >= v) {
          has_undecided = true;
          if (taken[u]) clash = true;
        }
      }
      if (!live || !has_undecided || clash) continue;
      for (std::size_t u : e)
        if (u >= v) taken[u] = true;
      ++disjoint;
    }
    return chosen + (n_ - v) - disjoint;
  }

  void branch(std::size_t v, std::size_t chosen)
  {
    if (have_best_ && upper_bound(v, chosen) <= best_.size()) return;
    if (v == n_) {
      best_.clear();
      for (std::size_t u = 0; u < n_; ++u)
        if (state_[u] == State::In) best_.push_back(u);
      have_best_ = true;
      return;
    }
    if (can_include(v)) {
      state_[v] = State::In;
      branch(v + 1, chosen + 1);
    }
    state_[v] = State::Out;
    branch(v + 1, chosen);
    state_[v] = State::Undecided;
  }

  std::size_t n_;
  const std::vector<std::vector<std::size_t>>& edges_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<State> state_;
  std::vector<std::size_t> best_;
  bool have_best_ = false;
};

}  // namespace

std::vector<std::size_t> maximum_avoiding_subset(std::size_t vertices,
                                                 const std::vector<std::vector<std::size_t>>& edges)
{
  return AvoiderSearch(vertices, edges).run();
}

WindowCertificate density_window_check(const MultiPoly& p, const Window& w, const Rational& delta,
                                       DensityMode mode, bool injective)
{
  if (delta <= 0 || delta > 1)
    throw PreconditionError("delta must lie in (0, 1], got " + format_rational(delta));
  const RootHypergraph h = enumerate_roots(p, w, injective);
  WindowCertificate cert;
  cert.window = w;
  cert.injective = injective;
  cert.delta = delta;
  cert.mode = mode;
  cert.enumeration_scheme = w.domain().enumeration_scheme();
  cert.transferable = mode == DensityMode::Additive ? is_translation_invariant(p)
                                                     : is_homogeneous(p).has_value();
  cert.avoider = maximum_avoiding_subset(w.size(), h.edges);
  const Rational threshold = delta * Rational(w.size());
  cert.kind = Rational(cert.avoider.size()) < threshold ? CertificateKind::DensityCertified
                                                        : CertificateKind::DensityAvoider;
  return cert;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<std::vector<std::size_t>>> disjoint_solutions(const MultiPoly& p,
                                                                        const Window& w,
                                                                        std::size_t count,
                                                                        bool injective)
{
  if (count == 0) throw PreconditionError("count must be at least 1");
  const RootHypergraph h = enumerate_roots(p, w, injective);
  // one representative tuple per value set, in order of first appearance
  std::vector<std::vector<std::size_t>> reps, sets;
  std::set<std::vector<std::size_t>> seen;
  for (const auto& t : h.tuples) {
    std::vector<std::size_t> s = t;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (seen.insert(s).second) {
      reps.push_back(t);
      sets.push_back(std::move(s));
    }
  }
  std::vector<bool> used(w.size(), false);
  std::vector<std::size_t> picked;
  auto search = [&](auto&& self, std::size_t from) -> bool {
    if (picked.size() == count) return true;
    for (std::size_t i = from; i < sets.size(); ++i) {
      if (std::any_of(sets[i].begin(), sets[i].end(), [&](std::size_t v) { return used[v]; })) continue;
      for (std::size_t v : sets[i]) used[v] = true;
      picked.push_back(i);
      if (self(self, i + 1)) return true;
      picked.pop_back();
      for (std::size_t v : sets[i]) used[v] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i : picked) out.push_back(reps[i]);
  return out;
}

Rational parse_rational(const std::string& text)
{
  auto digits = [](const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!digits(a)) throw ParseError("expected a non-negative integer numerator", text, 0);
    if (!digits(b)) throw ParseError("expected a positive integer denominator", text, slash + 1);
    if (Integer(b) == 0) throw ParseError("zero denominator", text, slash + 1);
    return Rational(Integer(a), Integer(b));
  }
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (!(whole.empty() || digits(whole)) || !digits(frac))
      throw ParseError("malformed decimal", text, 0);
    const Integer num(whole + frac);
    const Integer den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    return Rational(num, den);
  }
  if (!digits(s)) throw ParseError("expected a rational such as 3/5 or 0.6", text, 0);
  return Rational(Integer(s));
}

std::string format_rational(const Rational& r)
{
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace radocert
