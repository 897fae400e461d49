#include <radocert/linear_rado.hpp>

#include <radocert/errors.hpp>
#include <radocert/syntax.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace radocert {

LinearSystem::LinearSystem(Domain domain, std::vector<std::vector<Element>> rows)
    : domain_(std::move(domain)), entries_(std::move(rows))
{
  if (entries_.empty() || entries_[0].empty())
    throw PreconditionError("a linear system needs at least one row and one column");
  cols_ = entries_[0].size();
  for (const auto& row : entries_)
    if (row.size() != cols_) throw PreconditionError("ragged matrix: rows differ in length");
}

LinearSystem LinearSystem::parse(const Domain& domain, const std::string& text)
{
  std::vector<std::vector<Element>> rows;
  std::size_t row_start = 0;
  auto flush_row = [&](std::size_t end) {
    const std::string row = text.substr(row_start, end - row_start);
    const bool commas = row.find(',') != std::string::npos;
    std::vector<Element> entries;
    std::size_t i = 0;
    while (i < row.size()) {
      while (i < row.size() && (row[i] == ' ' || row[i] == '\t' || row[i] == '\r' ||
                                (commas && row[i] == ',')))
        ++i;
      if (i >= row.size()) break;
      std::size_t j = i;
      if (commas) {
        while (j < row.size() && row[j] != ',') ++j;
      } else {
        while (j < row.size() && row[j] != ' ' && row[j] != '\t' && row[j] != '\r') ++j;
      }
      std::string entry = row.substr(i, j - i);
      while (!entry.empty() && (entry.back() == ' ' || entry.back() == '\t')) entry.pop_back();
      try {
        entries.push_back(parse_element(domain, entry));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), text, row_start + i + e.position());
      }
      i = j;
    }
    if (!entries.empty()) rows.push_back(std::move(entries));
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';' || text[i] == '\n') {
      flush_row(i);
      row_start = i + 1;
    }
  }
  if (rows.empty()) throw ParseError("empty matrix", text, 0);
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw ParseError("rows differ in length", text, 0);
  return LinearSystem(domain, std::move(rows));
}

LinearSystem LinearSystem::permute_columns(const std::vector<std::size_t>& perm) const
{
  if (perm.size() != cols_) throw PreconditionError("permutation has the wrong size");
  std::vector<std::vector<Element>> rows(entries_.size(), std::vector<Element>(cols_));
  for (std::size_t r = 0; r < entries_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) rows[r][perm[c]] = entries_[r][c];
  return LinearSystem(domain_, std::move(rows));
}

std::string LinearSystem::to_string() const
{
  std::ostringstream out;
  for (std::size_t r = 0; r < entries_.size(); ++r) {
    if (r) out << "; ";
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << domain_.format(entries_[r][c]);
  }
  return out.str();
}

std::optional<std::vector<Fraction>> solve_in_span(const Domain& d,
                                                   const std::vector<std::vector<Element>>& columns,
                                                   const std::vector<Element>& target)
{
  const std::size_t m = target.size();
  const std::size_t k = columns.size();
  for (const auto& col : columns)
    if (col.size() != m) throw PreconditionError("column length mismatch");

  // augmented m x (k+1) matrix
  std::vector<std::vector<Element>> a(m, std::vector<Element>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = columns[j][i];
    a[i][k] = target[i];
  }

  // Bareiss: every entry stays a minor of the input, so each division is exact.
  Element prev = d.one();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < m; ++c) {
    std::size_t p = r;
    while (p < m && d.is_zero(a[p][c])) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j <= k; ++j)
        a[i][j] = d.exact_div(d.sub(d.mul(a[r][c], a[i][j]), d.mul(a[i][c], a[r][j])), prev);
      a[i][c] = d.zero();
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!d.is_zero(a[i][k])) return std::nullopt;

  std::vector<Fraction> x(k, d.embed(d.zero()));
  for (std::size_t row = r; row-- > 0;) {
    const std::size_t c = pivots[row];
    Fraction acc = d.embed(a[row][k]);
    for (std::size_t j = c + 1; j < k; ++j)
      if (!d.is_zero(x[j].num)) acc = d.sub(acc, d.mul(d.embed(a[row][j]), x[j]));
    x[c] = d.div(acc, d.embed(a[row][c]));
  }
  return x;
}

namespace {

class ColumnsSearch {
 public:
  explicit ColumnsSearch(const LinearSystem& a)
      : a_(a), d_(a.domain()), n_(a.cols()), failed_(std::size_t{1} << n_, false)
  {
  }

  std::optional<ColumnsWitness> run()
  {
    if (!search(0)) return std::nullopt;
    return witness_;
  }

 private:
  std::vector<Element> column(std::size_t c) const
  {
    std::vector<Element> v;
    for (std::size_t r = 0; r < a_.rows(); ++r) v.push_back(a_.at(r, c));
    return v;
  }

  std::vector<Element> column_sum(const std::vector<std::size_t>& cell) const
  {
    std::vector<Element> s(a_.rows(), d_.zero());
    for (std::size_t c : cell)
      for (std::size_t r = 0; r < a_.rows(); ++r) s[r] = d_.add(s[r], a_.at(r, c));
    return s;
  }

  bool search(std::uint32_t used)
  {
    const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
    if (used == full) return true;
    if (failed_[used]) return false;
    std::vector<std::vector<Element>> span;
    for (std::size_t c = 0; c < n_; ++c)
      if (used & (1u << c)) span.push_back(column(c));
    std::vector<std::size_t> cell;
    if (extend(used, span, cell, 0)) return true;
    failed_[used] = true;
    return false;
  }

  // Enumerates candidate cells among unused columns in lexicographic order of
  // their sorted index lists (pre-order of the subset tree).
  bool extend(std::uint32_t used, const std::vector<std::vector<Element>>& span,
              std::vector<std::size_t>& cell, std::size_t start)
  {
    for (std::size_t c = start; c < n_; ++c) {
      if (used & (1u << c)) continue;
      cell.push_back(c);
      if (try_cell(used, span, cell)) return true;
      if (extend(used, span, cell, c + 1)) return true;
      cell.pop_back();
    }
    return false;
  }

  bool try_cell(std::uint32_t used, const std::vector<std::vector<Element>>& span,
                const std::vector<std::size_t>& cell)
  {
    const auto sum = column_sum(cell);
    std::optional<std::vector<Fraction>> combo;
    if (used == 0) {
      if (!std::all_of(sum.begin(), sum.end(), [&](const Element& e) { return d_.is_zero(e); }))
        return false;
    } else {
      combo = solve_in_span(d_, span, sum);
      if (!combo) return false;
    }
    std::uint32_t next = used;
    for (std::size_t c : cell) next |= 1u << c;
    witness_.cells.push_back(cell);
    if (combo) witness_.combos.push_back(*combo);
    if (search(next)) return true;
    witness_.cells.pop_back();
    if (combo) witness_.combos.pop_back();
    return false;
  }

  const LinearSystem& a_;
  const Domain& d_;
  std::size_t n_;
  std::vector<bool> failed_;
  ColumnsWitness witness_;
};

}  // namespace

std::optional<ColumnsWitness> columns_condition(const LinearSystem& a, const ColumnsOptions& options)
{
  if (a.cols() > 24) throw PreconditionError("columns condition search supports at most 24 columns");
  if (a.cols() > options.max_columns && !options.allow_large)
    throw PreconditionError("system has " + std::to_string(a.cols()) + " columns; the cap is " +
                            std::to_string(options.max_columns) + " (raise it explicitly)");
  return ColumnsSearch(a).run();
}

bool verify_witness(const LinearSystem& a, const ColumnsWitness& w)
{
  const Domain& d = a.domain();
  const std::size_t n = a.cols();
  std::vector<bool> seen(n, false);
  for (const auto& cell : w.cells) {
    if (cell.empty()) throw PreconditionError("witness has an empty cell");
    for (std::size_t c : cell) {
      if (c >= n) throw PreconditionError("witness cell refers to column " + std::to_string(c + 1));
      if (seen[c]) throw PreconditionError("witness cells overlap at column " + std::to_string(c + 1));
      seen[c] = true;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw PreconditionError("witness cells do not cover every column");
  if (w.combos.size() + 1 != w.cells.size())
    throw PreconditionError("witness needs one combination per cell after the first");

  auto sum_of = [&](const std::vector<std::size_t>& cell) {
    std::vector<Element> s(a.rows(), d.zero());
    for (std::size_t c : cell)
      for (std::size_t r = 0; r < a.rows(); ++r) s[r] = d.add(s[r], a.at(r, c));
    return s;
  };

  const auto first = sum_of(w.cells[0]);
  for (const auto& e : first)
    if (!d.is_zero(e)) return false;

  std::vector<std::size_t> prior = w.cells[0];
  for (std::size_t j = 1; j < w.cells.size(); ++j) {
    std::sort(prior.begin(), prior.end());
    const auto& combo = w.combos[j - 1];
    if (combo.size() != prior.size())
      throw PreconditionError("combination for cell " + std::to_string(j + 1) + " has " +
                              std::to_string(combo.size()) + " coefficients, expected " +
                              std::to_string(prior.size()));
    const auto target = sum_of(w.cells[j]);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Fraction acc = d.embed(d.zero());
      for (std::size_t i = 0; i < prior.size(); ++i) {
        if (d.is_zero(combo[i].den)) throw PreconditionError("combination has a zero denominator");
        acc = d.add(acc, d.mul(combo[i], d.embed(a.at(r, prior[i]))));
      }
      if (!(acc == d.embed(target[r]))) return false;
    }
    prior.insert(prior.end(), w.cells[j].begin(), w.cells[j].end());
  }
  return true;
}

}  // namespace radocert
