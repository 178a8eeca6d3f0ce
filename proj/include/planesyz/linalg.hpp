#pragma once

#include <vector>

#include "planesyz/polynomial.hpp"

namespace planesyz {

/// Rank by Gaussian elimination over a field; rows are consumed.
template <typename K>
int matrix_rank(std::vector<std::vector<K>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < int(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const K inv = inverse(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (is_zero(rows[r][c])) continue;
      const K factor = rows[r][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Coordinates of forms of degree k in the monomial basis of S_k.
template <typename K>
std::vector<std::vector<K>> coefficient_rows(const std::vector<Polynomial<K>>& forms, int k, const K& zero) {
  std::vector<std::vector<K>> rows;
  for (const auto& p : forms) {
    std::vector<K> row(Monomial::count_in_degree(k), zero);
    for (const auto& t : p.terms())
      if (t.mono.degree() == k) row[t.mono.rank_in_degree()] = t.coeff;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace planesyz
