#pragma once

// Certified construction of a three-chain factorization for matrices free of
// the gamma and delta patterns: directional closures A1 and A2, an annotated
// zero classification, a column reordering pass, and a suffix factor A3 with
// A = A1 (*) A2 (*) A3 entry-wise.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chain3/matrix.hpp"

namespace chain3 {

enum class AnnotatedCell : unsigned char { one, zero_plain, zero_covered };

// 0/1 matrix whose zeros are split into plain zeros and covered zeros (zeros
// that the closure product turns into ones). Invariant: every covered zero
// has a one above it in its column and a one to its right in its row.
class AnnotatedMatrix {
 public:
  // Rows over {1, 0, *}: '1' one, '0' plain zero, '*' covered zero.
  static AnnotatedMatrix from_rows(const std::vector<std::string>& rows);
  static AnnotatedMatrix build(const BinaryMatrix& ones, const BinaryMatrix& covered);

  std::size_t rows() const noexcept { return ones_.rows(); }
  std::size_t cols() const noexcept { return ones_.cols(); }

  AnnotatedCell at(std::size_t i, std::size_t j) const;
  bool one(std::size_t i, std::size_t j) const noexcept { return ones_.get(i, j); }
  bool covered(std::size_t i, std::size_t j) const noexcept { return covered_.get(i, j); }

  const BinaryMatrix& ones() const noexcept { return ones_; }
  const BinaryMatrix& covered_zeros() const noexcept { return covered_; }

  std::vector<std::string> to_row_strings() const;

 private:
  AnnotatedMatrix(BinaryMatrix ones, BinaryMatrix covered);
  BinaryMatrix ones_;
  BinaryMatrix covered_;
};

// A1[i][j] = 1 iff row i of A has a one at column j or to its right.
BinaryMatrix build_a1(const BinaryMatrix& a);

// A2[i][j] = 1 iff column j of A has a one at row i or above it.
BinaryMatrix build_a2(const BinaryMatrix& a);

// Classify zeros of A against a dominating matrix A12: zeros where A12 is one
// become covered zeros. Throws not_dominated when A <= A12 fails, and
// invariant_violation when a covered zero lacks its support.
AnnotatedMatrix annotate(const BinaryMatrix& a, const BinaryMatrix& a12);

// First two-row configuration forbidden for annotated matrices of pattern-free
// inputs, as a diagnostic string; nullopt when clean. The four configurations
// are, over cols j1 < j2 and rows i1 < i2:
//   covered one / one covered,  one covered / covered one,
//   one any / plain one,        covered any / plain covered.
std::optional<std::string> annotated_violation(const AnnotatedMatrix& at);

// Column reordering pass: columns are appended left to right; a column whose
// covered-zero rows S_j intersect an earlier listed column's ones (leftmost
// such column k_j) is moved immediately left of k_j, otherwise it stays at
// the end. After the pass no row has a one strictly left of a covered zero.
Permutation algorithm1(const AnnotatedMatrix& at);

// True iff in the reordered column order no row has a one strictly left of a
// covered zero.
bool reorder_clean(const AnnotatedMatrix& at, const Permutation& l3);

// Per-row suffix factor in original column indices: row i is one exactly on
// the reordered positions at or after row i's first one. Rows without ones
// stay zero.
BinaryMatrix build_a3(const AnnotatedMatrix& at, const Permutation& l3);

struct TripleDecomposition {
  BinaryMatrix a1;
  BinaryMatrix a2;
  BinaryMatrix a3;
  Permutation l3;
  std::vector<std::pair<std::string, bool>> checks;
  bool certified = false;
};

// Full certified pipeline. Throws not_free_error with a witness when A
// contains gamma or delta, invariant_violation when any recorded check fails.
TripleDecomposition decompose(const BinaryMatrix& a);

// Row and column orders derived from the first factor's row nesting and the
// second factor's column nesting under which the entry-wise product of three
// chain matrices is gamma/delta-free. Falls back over both nesting directions
// per side if the primary choice fails verification.
std::pair<Permutation, Permutation> order_from_chain_triple(const BinaryMatrix& c1,
                                                            const BinaryMatrix& c2,
                                                            const BinaryMatrix& c3);

}  // namespace chain3
