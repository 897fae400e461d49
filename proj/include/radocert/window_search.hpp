#ifndef RADOCERT_WINDOW_SEARCH_HPP
#define RADOCERT_WINDOW_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <radocert/poly.hpp>

namespace radocert {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr const char* kToolVersion = "radocert 0.1.0";

// A finite ordered set of nonzero ring elements.
class Window {
 public:
  enum class Provenance { EnumerationPrefix, ExplicitList, IntegerInterval };

  // The first k nonzero elements of the domain's enumeration.
  static Window prefix(const Domain& domain, std::size_t k);
  // a..b over Z; 0 is not allowed inside the interval.
  static Window interval(const Integer& a, const Integer& b);
  static Window list(const Domain& domain, std::vector<Element> elements);
  // "1..9", "prefix:12", "list:1,2,3" or a bare comma list "1,2,3".
  static Window parse(const Domain& domain, const std::string& text);

  const Domain& domain() const { return domain_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }
  Provenance provenance() const { return provenance_; }
  // Canonical text form accepted by parse().
  std::string describe() const;
  std::optional<std::size_t> index_of(const Element& e) const;

  friend bool operator==(const Window& a, const Window& b)
  {
    return a.domain_ == b.domain_ && a.elements_ == b.elements_ && a.provenance_ == b.provenance_;
  }

 private:
  Window(Domain domain, std::vector<Element> elements, Provenance provenance);

  Domain domain_;
  std::vector<Element> elements_;
  Provenance provenance_;
  std::vector<std::size_t> sorted_;  // permutation sorting elements_, for lookup
};

// Roots of p inside a window. Tuples and edges are index sequences into the
// window; edges are the distinct value sets of the tuples, sorted.
struct RootHypergraph {
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::vector<std::size_t>> edges;
  bool injective = false;
};

// All tuples of w^n on which p vanishes, in lexicographic index order. With
// `injective` only tuples with pairwise distinct coordinates are kept.
RootHypergraph enumerate_roots(const MultiPoly& p, const Window& w, bool injective);

// Reference implementation: evaluates p on every tuple of w^n.
RootHypergraph enumerate_roots_naive(const MultiPoly& p, const Window& w, bool injective);

enum class CertificateKind { PartitionCertified, PartitionColorable, DensityCertified, DensityAvoider };
enum class DensityMode { Additive, Multiplicative };

std::string to_string(CertificateKind kind);
std::string to_string(DensityMode mode);

struct WindowCertificate {
  CertificateKind kind = CertificateKind::PartitionCertified;
  Window window = Window::list(Domain::integers(), {});
  bool injective = false;
  std::size_t colors = 0;                 // partition checks
  std::vector<std::uint32_t> coloring;    // PartitionColorable: color per window index
  Rational delta = 0;                     // density checks
  DensityMode mode = DensityMode::Additive;
  std::vector<std::size_t> avoider;       // maximum edge-free subset (density checks)
  bool transferable = true;               // density: p passes the structural precondition
  std::string enumeration_scheme;
  std::string tool_version = kToolVersion;
};

// Least proper l-coloring of the hypergraph in lexicographic order, if any.
std::optional<std::vector<std::uint32_t>> least_proper_coloring(
    std::size_t vertices, const std::vector<std::vector<std::size_t>>& edges, std::size_t colors);

// True iff some edge is monochromatic under `coloring`.
bool has_monochromatic_edge(const std::vector<std::vector<std::size_t>>& edges,
                            const std::vector<std::uint32_t>& coloring);

WindowCertificate check_window_l_pr(const MultiPoly& p, const Window& w, std::size_t colors,
                                    bool injective);

struct SearchOutcome {
  bool certified = false;           // false: budget exhausted, inconclusive
  WindowCertificate certificate;    // certifying window, or the largest colorable one
  std::size_t windows_checked = 0;
};

// Runs check_window_l_pr on prefix windows of size 1..budget.
SearchOutcome semidecide_l_pr(const MultiPoly& p, std::size_t colors, bool injective,
                              std::size_t budget);

// Maximum subset of [0, vertices) containing no edge; among maximum sets the
// one with the lexicographically least sorted index list.
std::vector<std::size_t> maximum_avoiding_subset(std::size_t vertices,
                                                 const std::vector<std::vector<std::size_t>>& edges);

// Throws PreconditionError unless 0 < delta <= 1.
WindowCertificate density_window_check(const MultiPoly& p, const Window& w, const Rational& delta,
                                       DensityMode mode, bool injective);

// t root tuples with pairwise disjoint value sets, or nothing.
std::optional<std::vector<std::vector<std::size_t>>> disjoint_solutions(const MultiPoly& p,
                                                                        const Window& w,
                                                                        std::size_t count,
                                                                        bool injective);

// "3/5", "0.6" or "1".
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

}  // namespace radocert

#endif
