#pragma once

// Ordered 0/1 matrices with labelled rows and columns, {0,1,*} patterns, and
// order-preserving submatrix search. Rows are stored as packed 64-bit words so
// the pattern kernels can scan whole word ranges at a time.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chain3/errors.hpp"

namespace chain3 {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Row and column selection witnessing a pattern embedding. Both index lists
// are strictly increasing and sized like the pattern they witness.
struct Occurrence {
  std::vector<std::size_t> row_indices;
  std::vector<std::size_t> col_indices;

  bool operator==(const Occurrence&) const = default;
};

class not_free_error : public error {
 public:
  not_free_error(std::string pattern_name, Occurrence witness);

  const std::string& pattern_name() const noexcept { return pattern_name_; }
  const Occurrence& witness() const noexcept { return witness_; }

 private:
  std::string pattern_name_;
  Occurrence witness_;
};

// A permutation stored as the target ordering: order()[k] is the source index
// placed at position k.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> order);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t operator[](std::size_t k) const { return order_[k]; }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> order_;
};

// compose(first, second)[k] = first[second[k]]; applying the result equals
// applying `first` and then reordering by `second`.
Permutation compose(const Permutation& first, const Permutation& second);

class BinaryMatrix {
 public:
  // Zero-filled with default labels u1..um / v1..vn. Both dimensions >= 1.
  BinaryMatrix(std::size_t rows, std::size_t cols);
  BinaryMatrix(std::size_t rows, std::size_t cols,
               std::vector<std::string> row_labels,
               std::vector<std::string> col_labels);

  // Rows given as strings over {0,1}, e.g. {"011", "101"}.
  static BinaryMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool at(std::size_t i, std::size_t j) const;  // bounds-checked
  bool get(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value);

  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
  void set_labels(std::vector<std::string> row_labels,
                  std::vector<std::string> col_labels);

  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row_bits(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  std::size_t row_popcount(std::size_t i) const;
  std::size_t col_popcount(std::size_t j) const;
  std::string row_string(std::size_t i) const;
  std::vector<std::string> to_row_strings() const;

  // Entry-wise plus label equality.
  bool operator==(const BinaryMatrix& other) const;
  bool same_entries(const BinaryMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

enum class PatternCell : unsigned char { zero, one, star };

class Pattern {
 public:
  // Rows given as strings over {0,1,*}, e.g. {"1*", "01"}.
  static Pattern from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  PatternCell at(std::size_t i, std::size_t j) const;
  std::string row_string(std::size_t i) const;
  std::vector<std::string> to_row_strings() const;

  bool operator==(const Pattern&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<PatternCell> cells_;
};

// Text format shared by matrices and patterns: '#' lines are comments, blank
// lines are skipped, an optional leading "labels: u1,u2 ; v1,v2" line names
// rows and columns, every other line is one row. Patterns additionally allow
// '*' and take no labels line.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix(const std::string& text);
Pattern parse_pattern(std::istream& in);
Pattern parse_pattern(const std::string& text);
std::string format_matrix(const BinaryMatrix& m, bool with_labels = false);

// True iff the submatrix selected by occ equals the pattern at every
// non-star cell. Malformed occurrences (wrong arity, repeats or decreasing
// runs, out-of-range indices) raise index_out_of_bounds.
bool matches_at(const BinaryMatrix& m, const Pattern& p, const Occurrence& occ);

// Lexicographically least occurrence (row tuple first, then column tuple),
// or nullopt when the pattern does not embed.
std::optional<Occurrence> find_pattern(const BinaryMatrix& m, const Pattern& p);

// Existence only. Uses word-parallel kernels for patterns whose boundary rows
// carry at most one constrained cell (covers every catalog pattern) and falls
// back to find_pattern otherwise.
bool contains_pattern(const BinaryMatrix& m, const Pattern& p);

bool is_free(const BinaryMatrix& m, std::span<const Pattern> patterns);
bool is_free(const BinaryMatrix& m, std::initializer_list<Pattern> patterns);

// Entry-wise product. Requires identical dimensions and identical labels.
BinaryMatrix hadamard(const BinaryMatrix& a, const BinaryMatrix& b);

// result[i][j] = m[row_order[i]][col_order[j]], labels permuted along.
BinaryMatrix permute(const BinaryMatrix& m, const Permutation& row_order,
                     const Permutation& col_order);

// Entry-wise a <= b on identically sized matrices.
bool leq(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace chain3
