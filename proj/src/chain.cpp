#include "chain3/chain.hpp"

#include <algorithm>
#include <numeric>

namespace chain3 {

namespace {

// Sort indices by popcount with the requested direction, ties by index.
std::vector<std::size_t> order_by_count(const std::vector<std::size_t>& counts,
                                        NestDirection direction) {
  std::vector<std::size_t> idx(counts.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (counts[a] != counts[b])
      return direction == NestDirection::increasing ? counts[a] < counts[b]
                                                    : counts[a] > counts[b];
    return a < b;
  });
  return idx;
}

// row_subset(a, b): row a's support is contained in row b's support.
bool row_subset(const BinaryMatrix& m, std::size_t a, std::size_t b) {
  auto wa = m.row_bits(a);
  auto wb = m.row_bits(b);
  for (std::size_t t = 0; t < m.words_per_row(); ++t)
    if (wa[t] & ~wb[t]) return false;
  return true;
}

bool col_subset(const BinaryMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.get(i, a) && !m.get(i, b)) return false;
  return true;
}

}  // namespace

std::optional<ChainOrdering> chain_ordering(const BinaryMatrix& m,
                                            NestDirection row_direction,
                                            NestDirection col_direction) {
  std::vector<std::size_t> row_counts(m.rows()), col_counts(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) row_counts[i] = m.row_popcount(i);
  for (std::size_t j = 0; j < m.cols(); ++j) col_counts[j] = m.col_popcount(j);

  std::vector<std::size_t> rows = order_by_count(row_counts, row_direction);
  std::vector<std::size_t> cols = order_by_count(col_counts, col_direction);

  // Consecutive containment along the sorted order certifies full nesting.
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
    bool ok = row_direction == NestDirection::increasing
                  ? row_subset(m, rows[k], rows[k + 1])
                  : row_subset(m, rows[k + 1], rows[k]);
    if (!ok) return std::nullopt;
  }
  for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
    bool ok = col_direction == NestDirection::increasing
                  ? col_subset(m, cols[k], cols[k + 1])
                  : col_subset(m, cols[k + 1], cols[k]);
    if (!ok) return std::nullopt;
  }
  return ChainOrdering{Permutation(std::move(rows)), Permutation(std::move(cols)),
                       row_direction, col_direction};
}

std::optional<ChainOrdering> chain_ordering(const BinaryMatrix& m) {
  return chain_ordering(m, NestDirection::increasing, NestDirection::increasing);
}

bool is_chain(const BinaryMatrix& m) { return chain_ordering(m).has_value(); }

ThresholdRepresentation threshold_representation(const BinaryMatrix& m) {
  // Rank rows by neighborhood size, largest first; membership of a column in
  // a row is then determined by rank alone, so |N(v)| many top-ranked rows
  // are exactly the neighbors of v.
  auto ordering = chain_ordering(m, NestDirection::decreasing,
                                 NestDirection::increasing);
  if (!ordering) throw error(errc::not_chain, "matrix is not a chain graph");

  ThresholdRepresentation rep;
  rep.row_values.assign(m.rows(), 0);
  rep.col_thresholds.assign(m.cols(), 0);
  for (std::size_t k = 0; k < m.rows(); ++k)
    rep.row_values[ordering->row_order[k]] = static_cast<std::int64_t>(2 * k);
  for (std::size_t j = 0; j < m.cols(); ++j)
    rep.col_thresholds[j] = 2 * static_cast<std::int64_t>(m.col_popcount(j)) - 1;
  return rep;
}

}  // namespace chain3
