#pragma once

// Chain graph recognition, nested orderings, and exact integer threshold
// representations (row values against column thresholds, strict comparison).

#include <cstdint>
#include <optional>
#include <vector>

#include "chain3/matrix.hpp"

namespace chain3 {

enum class NestDirection { increasing, decreasing };

// Row and column orders under which neighborhoods are nested in the stated
// directions. "increasing" means the set at position k is contained in the
// set at position k+1.
struct ChainOrdering {
  Permutation row_order;
  Permutation col_order;
  NestDirection row_direction;
  NestDirection col_direction;
};

// Nested ordering with the requested directions, or nullopt when the matrix
// is not a chain. Ties are broken by original index, empty rows and columns
// sort to the small end.
std::optional<ChainOrdering> chain_ordering(const BinaryMatrix& m,
                                            NestDirection row_direction,
                                            NestDirection col_direction);
std::optional<ChainOrdering> chain_ordering(const BinaryMatrix& m);

bool is_chain(const BinaryMatrix& m);

// Exact integer model of a chain graph: edge (u, v) iff
// row_values[u] < col_thresholds[v]. Values are even, thresholds odd, so no
// comparison ever ties.
struct ThresholdRepresentation {
  std::vector<std::int64_t> row_values;
  std::vector<std::int64_t> col_thresholds;
};

// Throws not_chain when the matrix is not a chain graph.
ThresholdRepresentation threshold_representation(const BinaryMatrix& m);

}  // namespace chain3
