#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "irr/buchi.hpp"
#include "irr/words.hpp"

namespace irr {

/// A binary omega^2-word that is ultimately periodic in both coordinates.
/// Entry (m, n) with m, n >= 1 is table[idx_m(m)][idx_n(n)] where an index
/// past the stem reduces modulo the period.  The m-th column is the
/// omega-word x(m,1) x(m,2) ..., following the convention that the first
/// coordinate selects the column.
class grid_spec {
 public:
  grid_spec(std::size_t row_stem, std::size_t row_period, std::size_t col_stem,
            std::size_t col_period, std::vector<std::string> table)
      : row_stem_(row_stem), row_period_(row_period), col_stem_(col_stem),
        col_period_(col_period), table_(std::move(table)) {
    if (row_period_ == 0 || col_period_ == 0)
      throw std::invalid_argument("grid_spec: periods must be positive");
    if (table_.size() != row_stem_ + row_period_)
      throw std::invalid_argument("grid_spec: wrong number of table rows");
    for (const auto& row : table_) {
      if (row.size() != col_stem_ + col_period_)
        throw std::invalid_argument("grid_spec: wrong table row length");
      for (char c : row)
        if (c != '0' && c != '1')
          throw std::invalid_argument("grid_spec: entries must be 0 or 1");
    }
  }

  std::size_t row_stem() const { return row_stem_; }
  std::size_t row_period() const { return row_period_; }
  std::size_t col_stem() const { return col_stem_; }
  std::size_t col_period() const { return col_period_; }
  const std::vector<std::string>& table() const { return table_; }

  /// Entry x(m, n); both indices 1-based.
  char at(std::size_t m, std::size_t n) const {
    if (m == 0 || n == 0)
      throw std::invalid_argument("grid_spec::at: indices are 1-based");
    return table_[fold(m, row_stem_, row_period_)]
                 [fold(n, col_stem_, col_period_)];
  }

  /// The m-th column x(m,1) x(m,2) ... as a lasso with stem length col_stem
  /// and cycle length col_period.
  lasso_word column(std::size_t m) const {
    const std::string& row = table_[fold(m, row_stem_, row_period_)];
    return lasso_word(row.substr(0, col_stem_), row.substr(col_stem_),
                      alphabet::binary());
  }

  friend bool operator==(const grid_spec&, const grid_spec&) = default;

 private:
  static std::size_t fold(std::size_t k, std::size_t stem,
                          std::size_t period) {
    return k <= stem ? k - 1 : stem + (k - 1 - stem) % period;
  }

  std::size_t row_stem_, row_period_, col_stem_, col_period_;
  std::vector<std::string> table_;
};

/// Some column has infinitely many 1s.  Columns repeat with the row period,
/// so the finitely many column classes decide the matter.
inline bool in_s(const grid_spec& g) {
  const buchi_automaton a = automaton_inf_ones();
  for (std::size_t m = 1; m <= g.row_stem() + g.row_period(); ++m)
    if (accepts_lasso(a, g.column(m))) return true;
  return false;
}

/// Every column has finitely many 1s; the complement of in_s.
inline bool in_p(const grid_spec& g) { return !in_s(g); }

/// Minimal level m+n at which the two grids disagree, or absent when they
/// denote the same omega^2-word.  Agreement up to the bounding level implies
/// equality because both grids repeat beyond their stems.
inline std::optional<std::size_t> first_disagreement_level(
    const grid_spec& a, const grid_spec& b) {
  const std::size_t rows = std::max(a.row_stem(), b.row_stem()) +
                           std::lcm(a.row_period(), b.row_period());
  const std::size_t cols = std::max(a.col_stem(), b.col_stem()) +
                           std::lcm(a.col_period(), b.col_period());
  const std::size_t bound = rows + cols;
  for (std::size_t level = 2; level <= bound; ++level)
    for (std::size_t m = 1; m < level; ++m)
      if (a.at(m, level - m) != b.at(m, level - m)) return level;
  return std::nullopt;
}

/// The same omega^2-word with the row period doubled (each cycle row
/// duplicated).  Used by invariance checks.
inline grid_spec unroll_rows(const grid_spec& g) {
  std::vector<std::string> table(g.table().begin(),
                                 g.table().begin() + g.row_stem());
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = g.row_stem(); i < g.table().size(); ++i)
      table.push_back(g.table()[i]);
  return grid_spec(g.row_stem(), 2 * g.row_period(), g.col_stem(),
                   g.col_period(), std::move(table));
}

/// The same omega^2-word with the column period doubled.
inline grid_spec unroll_cols(const grid_spec& g) {
  std::vector<std::string> table;
  for (const auto& row : g.table())
    table.push_back(row + row.substr(g.col_stem()));
  return grid_spec(g.row_stem(), g.row_period(), g.col_stem(),
                   2 * g.col_period(), std::move(table));
}

}  // namespace irr
