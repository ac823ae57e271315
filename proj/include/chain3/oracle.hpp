#pragma once

// Desk-scale ground truth: exact Ferrers dimension via feasible zero covers,
// exhaustive search for pattern-free row/column orderings, canonical
// enumeration of bipartite adjacency classes, and a cross-validation report
// tying the independent answers together. The two searches have strictly
// serial paths (jobs = 1) and OpenMP-parallel paths returning identical,
// deterministic results.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chain3/matrix.hpp"

namespace chain3 {

// Subset of zero cells of a matrix, row-major sorted, no repeats.
struct ZeroSet {
  std::vector<std::pair<std::size_t, std::size_t>> cells;

  bool operator==(const ZeroSet&) const = default;
};

// A zero set is feasible when it contains no two cells (r1,c2), (r2,c1)
// whose corners (r1,c1) and (r2,c2) both lie outside the set. Cells must be
// zeros of m (cell_not_zero otherwise).
bool is_feasible_zero_set(const BinaryMatrix& m, const ZeroSet& z);

struct DimensionCertificate {
  std::optional<int> dimension;  // nullopt: every cover needs more than d_max sets
  int d_max = 4;
  std::vector<ZeroSet> cover;    // dimension many feasible sets covering all zeros

  bool exceeded() const noexcept { return !dimension.has_value(); }
};

// Least number of feasible zero sets covering all zeros. All-ones matrices
// have dimension 0 (empty cover). Throws budget_exceeded when the matrix has
// more than zero_budget zeros.
DimensionCertificate ferrers_dimension(const BinaryMatrix& m, int d_max = 4,
                                       std::size_t zero_budget = 20);

struct SearchOptions {
  std::size_t budget = 7;  // cap on each matrix dimension
  int jobs = 1;            // 1 serial, 0 hardware default, n explicit threads
};

// First row/column ordering (lexicographic over row orders, then column
// orders) under which the permuted matrix avoids every given pattern.
// Backtracks over column prefixes, pruning prefixes that already contain a
// pattern. Throws budget_exceeded when a dimension exceeds the budget.
std::optional<std::pair<Permutation, Permutation>> search_free_ordering(
    const BinaryMatrix& m, std::span<const Pattern> patterns,
    const SearchOptions& options = {});

// Unpruned reference: tries every ordering pair in the same lexicographic
// order and tests the fully permuted matrix.
std::optional<std::pair<Permutation, Permutation>> search_free_ordering_exhaustive(
    const BinaryMatrix& m, std::span<const Pattern> patterns,
    const SearchOptions& options = {});

// Streams one canonical representative per row/column-permutation class of
// rows x cols 0/1 matrices, in increasing canonical-code order. The
// representative is the matrix equal to its own canonical form: the minimum,
// over row orders, of the matrix with columns sorted lexicographically.
// Dimensions above 4 throw budget_exceeded.
void enumerate_bipartite(std::size_t rows, std::size_t cols,
                         const std::function<void(const BinaryMatrix&)>& emit);
std::vector<BinaryMatrix> canonical_matrices(std::size_t rows, std::size_t cols);

// Reference pattern search: scans all row subsets, then column subsets, in
// lexicographic order and returns the first match. Exponential; test scale.
std::optional<Occurrence> find_pattern_naive(const BinaryMatrix& m, const Pattern& p);

struct CrossValidationReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t classes = 0;
  std::size_t freeable = 0;   // classes with a gamma/delta-free ordering
  std::size_t dim_le_3 = 0;   // classes with Ferrers dimension at most 3
  std::vector<std::string> discrepancies;
};

// For every canonical class: compares ordering-search freeability against
// dimension <= 3, re-verifies the dimension certificate, and runs the
// certified decomposition on each freeable class. Any disagreement or failed
// certification lands in `discrepancies`.
CrossValidationReport cross_validate(std::size_t rows, std::size_t cols, int jobs = 1);

}  // namespace chain3
