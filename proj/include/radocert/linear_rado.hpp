#ifndef RADOCERT_LINEAR_RADO_HPP
#define RADOCERT_LINEAR_RADO_HPP

#include <optional>
#include <string>
#include <vector>

#include <radocert/ring.hpp>

namespace radocert {

// A homogeneous linear system A x = 0 with entries in R.
class LinearSystem {
 public:
  LinearSystem(Domain domain, std::vector<std::vector<Element>> rows);

  // Rows separated by ';' or newlines; entries by ',' when the row contains
  // one, otherwise by whitespace. Entries use the ring element syntax.
  static LinearSystem parse(const Domain& domain, const std::string& text);

  const Domain& domain() const { return domain_; }
  std::size_t rows() const { return entries_.size(); }
  std::size_t cols() const { return cols_; }
  const Element& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  const std::vector<std::vector<Element>>& entries() const { return entries_; }

  LinearSystem permute_columns(const std::vector<std::size_t>& perm) const;
  std::string to_string() const;

 private:
  Domain domain_;
  std::vector<std::vector<Element>> entries_;
  std::size_t cols_;
};

// Ordered partition (C_1, ..., C_r) of the 0-based column indices. combos[j-1]
// holds the K-coefficients expressing the column sum of C_j (j >= 1) in terms
// of the columns of C_0 u ... u C_{j-1}, listed in increasing column order.
struct ColumnsWitness {
  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::vector<Fraction>> combos;

  friend bool operator==(const ColumnsWitness&, const ColumnsWitness&) = default;
};

struct ColumnsOptions {
  // Searching ordered partitions grows like 3^n; larger systems need an
  // explicit opt-in.
  std::size_t max_columns = 9;
  bool allow_large = false;
};

// Decides the columns condition. Returns the least witness when cells are
// compared as sorted index lists, lexicographically, cell by cell.
std::optional<ColumnsWitness> columns_condition(const LinearSystem& a,
                                                const ColumnsOptions& options = {});

// Checks both defining equations exactly. Throws PreconditionError when the
// cells are not an ordered partition of the columns or a combo has the wrong
// length.
bool verify_witness(const LinearSystem& a, const ColumnsWitness& w);

// If `target` lies in the K-span of `columns`, returns one coefficient vector
// (free coordinates set to 0). Fraction-free elimination with exact division.
std::optional<std::vector<Fraction>> solve_in_span(const Domain& domain,
                                                   const std::vector<std::vector<Element>>& columns,
                                                   const std::vector<Element>& target);

}  // namespace radocert

#endif
