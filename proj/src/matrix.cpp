#include "chain3/matrix.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <sstream>

namespace chain3 {

const char* errc_name(errc code) {
  switch (code) {
    case errc::ragged_rows: return "ragged_rows";
    case errc::illegal_character: return "illegal_character";
    case errc::empty_input: return "empty_input";
    case errc::index_out_of_bounds: return "index_out_of_bounds";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::label_mismatch: return "label_mismatch";
    case errc::size_mismatch: return "size_mismatch";
    case errc::not_chain: return "not_chain";
    case errc::not_dominated: return "not_dominated";
    case errc::invariant_violation: return "invariant_violation";
    case errc::not_free: return "not_free";
    case errc::cell_not_zero: return "cell_not_zero";
    case errc::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace {

std::string describe_occurrence(const Occurrence& occ) {
  std::ostringstream out;
  out << "rows";
  for (std::size_t r : occ.row_indices) out << ' ' << (r + 1);
  out << " cols";
  for (std::size_t c : occ.col_indices) out << ' ' << (c + 1);
  return out.str();
}

}  // namespace

not_free_error::not_free_error(std::string pattern_name, Occurrence witness)
    : error(errc::not_free, "pattern " + pattern_name + " occurs at " +
                                describe_occurrence(witness)),
      pattern_name_(std::move(pattern_name)),
      witness_(std::move(witness)) {}

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t v : order_) {
    if (v >= order_.size() || seen[v])
      throw error(errc::invariant_violation, "order list is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Permutation(std::move(order));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(order_.size());
  for (std::size_t k = 0; k < order_.size(); ++k) inv[order_[k]] = k;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size())
    throw error(errc::size_mismatch, "composed permutations differ in size");
  std::vector<std::size_t> order(first.size());
  for (std::size_t k = 0; k < first.size(); ++k) order[k] = first[second[k]];
  return Permutation(std::move(order));
}

namespace {

std::vector<std::string> default_labels(char prefix, std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i + 1);
  return labels;
}

void check_label_list(const std::vector<std::string>& labels, std::size_t n,
                      const char* side) {
  if (labels.size() != n)
    throw error(errc::label_mismatch,
                std::string(side) + " label count does not match dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        throw error(errc::label_mismatch,
                    std::string(side) + " labels repeat: " + labels[i]);
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : BinaryMatrix(rows, cols, default_labels('u', rows), default_labels('v', cols)) {}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols,
                           std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  if (rows_ == 0 || cols_ == 0)
    throw error(errc::empty_input, "matrix dimensions must be positive");
  bits_.assign(rows_ * words_, 0);
  check_label_list(row_labels, rows_, "row");
  check_label_list(col_labels, cols_, "column");
  row_labels_ = std::move(row_labels);
  col_labels_ = std::move(col_labels);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw error(errc::empty_input, "no rows given");
  BinaryMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw error(errc::ragged_rows, "rows differ in length");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      char c = rows[i][j];
      if (c != '0' && c != '1')
        throw error(errc::illegal_character,
                    std::string("unexpected character '") + c + "' in matrix row");
      if (c == '1') m.set(i, j, true);
    }
  }
  return m;
}

bool BinaryMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw error(errc::index_out_of_bounds, "matrix index out of range");
  return get(i, j);
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_)
    throw error(errc::index_out_of_bounds, "matrix index out of range");
  std::uint64_t& word = bits_[i * words_ + j / 64];
  std::uint64_t mask = std::uint64_t{1} << (j % 64);
  if (value)
    word |= mask;
  else
    word &= ~mask;
}

void BinaryMatrix::set_labels(std::vector<std::string> row_labels,
                              std::vector<std::string> col_labels) {
  check_label_list(row_labels, rows_, "row");
  check_label_list(col_labels, cols_, "column");
  row_labels_ = std::move(row_labels);
  col_labels_ = std::move(col_labels);
}

std::size_t BinaryMatrix::row_popcount(std::size_t i) const {
  std::size_t total = 0;
  for (std::uint64_t w : row_bits(i)) total += std::popcount(w);
  return total;
}

std::size_t BinaryMatrix::col_popcount(std::size_t j) const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < rows_; ++i) total += get(i, j);
  return total;
}

std::string BinaryMatrix::row_string(std::size_t i) const {
  std::string s(cols_, '0');
  for (std::size_t j = 0; j < cols_; ++j)
    if (get(i, j)) s[j] = '1';
  return s;
}

std::vector<std::string> BinaryMatrix::to_row_strings() const {
  std::vector<std::string> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows[i] = row_string(i);
  return rows;
}

bool BinaryMatrix::same_entries(const BinaryMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
  return same_entries(other) && row_labels_ == other.row_labels_ &&
         col_labels_ == other.col_labels_;
}

Pattern Pattern::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw error(errc::empty_input, "no pattern rows given");
  Pattern p;
  p.rows_ = rows.size();
  p.cols_ = rows.front().size();
  if (p.cols_ == 0) throw error(errc::empty_input, "empty pattern row");
  p.cells_.reserve(p.rows_ * p.cols_);
  for (const std::string& row : rows) {
    if (row.size() != p.cols_) throw error(errc::ragged_rows, "pattern rows differ in length");
    for (char c : row) {
      switch (c) {
        case '0': p.cells_.push_back(PatternCell::zero); break;
        case '1': p.cells_.push_back(PatternCell::one); break;
        case '*': p.cells_.push_back(PatternCell::star); break;
        default:
          throw error(errc::illegal_character,
                      std::string("unexpected character '") + c + "' in pattern row");
      }
    }
  }
  return p;
}

PatternCell Pattern::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw error(errc::index_out_of_bounds, "pattern index out of range");
  return cells_[i * cols_ + j];
}

std::string Pattern::row_string(std::size_t i) const {
  std::string s;
  s.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    switch (at(i, j)) {
      case PatternCell::zero: s.push_back('0'); break;
      case PatternCell::one: s.push_back('1'); break;
      case PatternCell::star: s.push_back('*'); break;
    }
  }
  return s;
}

std::vector<std::string> Pattern::to_row_strings() const {
  std::vector<std::string> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows[i] = row_string(i);
  return rows;
}

namespace {

std::string strip(const std::string& line) {
  std::size_t b = line.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = line.find_last_not_of(" \t\r\n");
  return line.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(strip(item));
  return out;
}

struct ParsedRows {
  std::vector<std::string> rows;
  bool has_labels = false;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

ParsedRows read_rows(std::istream& in, bool allow_labels) {
  ParsedRows result;
  std::string line;
  bool first_content = true;
  while (std::getline(in, line)) {
    std::string body = strip(line);
    if (body.empty() || body.front() == '#') continue;
    if (first_content && allow_labels && body.rfind("labels:", 0) == 0) {
      std::string rest = body.substr(7);
      std::size_t sep = rest.find(';');
      if (sep == std::string::npos)
        throw error(errc::label_mismatch, "labels line needs ';' between sides");
      result.has_labels = true;
      result.row_labels = split_list(strip(rest.substr(0, sep)));
      result.col_labels = split_list(strip(rest.substr(sep + 1)));
      first_content = false;
      continue;
    }
    first_content = false;
    result.rows.push_back(body);
  }
  if (result.rows.empty()) throw error(errc::empty_input, "no matrix rows in input");
  return result;
}

}  // namespace

BinaryMatrix parse_matrix(std::istream& in) {
  ParsedRows parsed = read_rows(in, true);
  BinaryMatrix m = BinaryMatrix::from_rows(parsed.rows);
  if (parsed.has_labels)
    m.set_labels(std::move(parsed.row_labels), std::move(parsed.col_labels));
  return m;
}

BinaryMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

Pattern parse_pattern(std::istream& in) {
  ParsedRows parsed = read_rows(in, false);
  return Pattern::from_rows(parsed.rows);
}

Pattern parse_pattern(const std::string& text) {
  std::istringstream in(text);
  return parse_pattern(in);
}

std::string format_matrix(const BinaryMatrix& m, bool with_labels) {
  std::ostringstream out;
  if (with_labels) {
    out << "labels: ";
    for (std::size_t i = 0; i < m.rows(); ++i)
      out << (i ? "," : "") << m.row_labels()[i];
    out << " ; ";
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? "," : "") << m.col_labels()[j];
    out << '\n';
  }
  for (std::size_t i = 0; i < m.rows(); ++i) out << m.row_string(i) << '\n';
  return out.str();
}

bool matches_at(const BinaryMatrix& m, const Pattern& p, const Occurrence& occ) {
  if (occ.row_indices.size() != p.rows() || occ.col_indices.size() != p.cols())
    throw error(errc::index_out_of_bounds, "occurrence arity does not match pattern");
  for (std::size_t t = 0; t < occ.row_indices.size(); ++t) {
    if (occ.row_indices[t] >= m.rows() || (t > 0 && occ.row_indices[t] <= occ.row_indices[t - 1]))
      throw error(errc::index_out_of_bounds, "occurrence rows invalid");
  }
  for (std::size_t t = 0; t < occ.col_indices.size(); ++t) {
    if (occ.col_indices[t] >= m.cols() || (t > 0 && occ.col_indices[t] <= occ.col_indices[t - 1]))
      throw error(errc::index_out_of_bounds, "occurrence cols invalid");
  }
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      PatternCell c = p.at(i, j);
      if (c == PatternCell::star) continue;
      if (m.get(occ.row_indices[i], occ.col_indices[j]) != (c == PatternCell::one))
        return false;
    }
  return true;
}

namespace {

// Word-level bitset helpers over `words` words covering `cols` valid bits.

std::size_t first_set_at_or_after(const std::uint64_t* w, std::size_t words,
                                  std::size_t from) {
  std::size_t wi = from / 64;
  if (wi >= words) return npos;
  std::uint64_t cur = w[wi] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (cur) return wi * 64 + std::countr_zero(cur);
    if (++wi >= words) return npos;
    cur = w[wi];
  }
}

class Masks {
 public:
  Masks(std::size_t count, std::size_t words, std::size_t cols)
      : words_(words), data_(count * words) {
    tail_ = (cols % 64) ? ((std::uint64_t{1} << (cols % 64)) - 1) : ~std::uint64_t{0};
  }

  std::uint64_t* mask(std::size_t k) { return data_.data() + k * words_; }

  void fill_all(std::size_t k) {
    std::uint64_t* w = mask(k);
    std::fill(w, w + words_, ~std::uint64_t{0});
    w[words_ - 1] = tail_;
  }

  void and_bits(std::size_t k, std::span<const std::uint64_t> bits) {
    std::uint64_t* w = mask(k);
    for (std::size_t t = 0; t < words_; ++t) w[t] &= bits[t];
  }

  void and_not_bits(std::size_t k, std::span<const std::uint64_t> bits) {
    std::uint64_t* w = mask(k);
    for (std::size_t t = 0; t < words_; ++t) w[t] &= ~bits[t];
    w[words_ - 1] &= tail_;
  }

  // Strictly increasing column choices, one per mask, smallest first.
  bool greedy_exists(std::size_t count) const {
    std::size_t pos = 0;
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t j = first_set_at_or_after(data_.data() + k * words_, words_, pos);
      if (j == npos) return false;
      pos = j + 1;
    }
    return true;
  }

  bool greedy_pick(std::size_t count, std::vector<std::size_t>& out) const {
    out.clear();
    std::size_t pos = 0;
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t j = first_set_at_or_after(data_.data() + k * words_, words_, pos);
      if (j == npos) return false;
      out.push_back(j);
      pos = j + 1;
    }
    return true;
  }

 private:
  std::size_t words_;
  std::uint64_t tail_;
  std::vector<std::uint64_t> data_;
};

// Prefix/suffix aggregates over matrix rows, exclusive of the indexed row.
// above_or[i] bit j: some row r < i has a one at j. above_zero[i] bit j: some
// row r < i has a zero at j. Likewise below_* over rows r > i.
struct RowAggregates {
  std::size_t words;
  std::vector<std::uint64_t> above_or, above_zero, below_or, below_zero;

  explicit RowAggregates(const BinaryMatrix& m) : words(m.words_per_row()) {
    std::size_t rows = m.rows();
    std::uint64_t tail = (m.cols() % 64)
                             ? ((std::uint64_t{1} << (m.cols() % 64)) - 1)
                             : ~std::uint64_t{0};
    above_or.assign(rows * words, 0);
    above_zero.assign(rows * words, 0);
    below_or.assign(rows * words, 0);
    below_zero.assign(rows * words, 0);
    std::vector<std::uint64_t> acc_or(words, 0), acc_zero(words, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      std::copy(acc_or.begin(), acc_or.end(), above_or.begin() + i * words);
      std::copy(acc_zero.begin(), acc_zero.end(), above_zero.begin() + i * words);
      auto bits = m.row_bits(i);
      for (std::size_t t = 0; t < words; ++t) {
        acc_or[t] |= bits[t];
        acc_zero[t] |= ~bits[t];
      }
      acc_zero[words - 1] &= tail;
    }
    std::fill(acc_or.begin(), acc_or.end(), 0);
    std::fill(acc_zero.begin(), acc_zero.end(), 0);
    for (std::size_t i = rows; i-- > 0;) {
      std::copy(acc_or.begin(), acc_or.end(), below_or.begin() + i * words);
      std::copy(acc_zero.begin(), acc_zero.end(), below_zero.begin() + i * words);
      auto bits = m.row_bits(i);
      for (std::size_t t = 0; t < words; ++t) {
        acc_or[t] |= bits[t];
        acc_zero[t] |= ~bits[t];
      }
      acc_zero[words - 1] &= tail;
    }
  }

  std::span<const std::uint64_t> above(std::size_t i, bool one) const {
    const auto& v = one ? above_or : above_zero;
    return {v.data() + i * words, words};
  }
  std::span<const std::uint64_t> below(std::size_t i, bool one) const {
    const auto& v = one ? below_or : below_zero;
    return {v.data() + i * words, words};
  }
};

struct BoundaryRow {
  bool absorbed = false;
  bool has_constraint = false;
  std::size_t col = 0;
  bool value = false;
};

std::size_t constrained_cells(const Pattern& p, std::size_t row) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < p.cols(); ++j)
    if (p.at(row, j) != PatternCell::star) ++count;
  return count;
}

BoundaryRow make_boundary(const Pattern& p, std::size_t row) {
  BoundaryRow b;
  b.absorbed = true;
  for (std::size_t j = 0; j < p.cols(); ++j) {
    if (p.at(row, j) == PatternCell::star) continue;
    b.has_constraint = true;
    b.col = j;
    b.value = p.at(row, j) == PatternCell::one;
  }
  return b;
}

void apply_core_row(Masks& masks, const Pattern& p, std::size_t pattern_row,
                    const BinaryMatrix& m, std::size_t matrix_row) {
  for (std::size_t k = 0; k < p.cols(); ++k) {
    PatternCell c = p.at(pattern_row, k);
    if (c == PatternCell::one)
      masks.and_bits(k, m.row_bits(matrix_row));
    else if (c == PatternCell::zero)
      masks.and_not_bits(k, m.row_bits(matrix_row));
  }
}

}  // namespace

bool contains_pattern(const BinaryMatrix& m, const Pattern& p) {
  std::size_t pr = p.rows(), pc = p.cols();
  if (pr > m.rows() || pc > m.cols()) return false;

  BoundaryRow top, bottom;
  std::size_t core_lo = 0, core_hi = pr - 1;
  if (pr >= 2 && constrained_cells(p, 0) <= 1) {
    top = make_boundary(p, 0);
    core_lo = 1;
  }
  if (core_hi - core_lo + 1 >= 2 && constrained_cells(p, pr - 1) <= 1) {
    bottom = make_boundary(p, pr - 1);
    core_hi = pr - 2;
  }
  std::size_t core = core_hi - core_lo + 1;
  if (core > 2) return find_pattern(m, p).has_value();

  RowAggregates* agg = nullptr;
  std::optional<RowAggregates> agg_storage;
  if (top.absorbed || bottom.absorbed) {
    agg_storage.emplace(m);
    agg = &*agg_storage;
  }

  std::size_t lo = top.absorbed ? 1 : 0;
  std::size_t hi_base = m.rows() - 1 - (bottom.absorbed ? 1 : 0);
  Masks masks(pc, m.words_per_row(), m.cols());

  auto apply_boundaries = [&](std::size_t first_core, std::size_t last_core) {
    if (top.absorbed && top.has_constraint)
      masks.and_bits(top.col, agg->above(first_core, top.value));
    if (bottom.absorbed && bottom.has_constraint)
      masks.and_bits(bottom.col, agg->below(last_core, bottom.value));
  };

  if (core == 1) {
    for (std::size_t i = lo; i <= hi_base && i < m.rows(); ++i) {
      for (std::size_t k = 0; k < pc; ++k) masks.fill_all(k);
      apply_core_row(masks, p, core_lo, m, i);
      apply_boundaries(i, i);
      if (masks.greedy_exists(pc)) return true;
    }
    return false;
  }

  for (std::size_t i1 = lo; i1 + 1 <= hi_base && i1 < m.rows(); ++i1) {
    for (std::size_t i2 = i1 + 1; i2 <= hi_base; ++i2) {
      for (std::size_t k = 0; k < pc; ++k) masks.fill_all(k);
      apply_core_row(masks, p, core_lo, m, i1);
      apply_core_row(masks, p, core_lo + 1, m, i2);
      apply_boundaries(i1, i2);
      if (masks.greedy_exists(pc)) return true;
    }
  }
  return false;
}

std::optional<Occurrence> find_pattern(const BinaryMatrix& m, const Pattern& p) {
  std::size_t pr = p.rows(), pc = p.cols();
  if (pr > m.rows() || pc > m.cols()) return std::nullopt;

  // DFS over strictly increasing row tuples in lexicographic order. At depth
  // t the mask stack holds, per pattern column, the matrix columns compatible
  // with the rows chosen so far; the greedy check is a relaxation (future row
  // constraints only shrink masks), so pruning on it never skips a witness.
  std::size_t words = m.words_per_row();
  std::vector<Masks> stack;
  stack.reserve(pr + 1);
  for (std::size_t t = 0; t <= pr; ++t) stack.emplace_back(pc, words, m.cols());
  for (std::size_t k = 0; k < pc; ++k) stack[0].fill_all(k);

  std::vector<std::size_t> rows_chosen;
  std::vector<std::size_t> cols_out;
  rows_chosen.reserve(pr);

  auto copy_level = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = 0; k < pc; ++k)
      std::copy(stack[from].mask(k), stack[from].mask(k) + words, stack[to].mask(k));
  };

  std::size_t t = 0;
  std::vector<std::size_t> next_candidate(pr + 1, 0);
  next_candidate[0] = 0;
  while (true) {
    if (t == pr) {
      if (stack[t].greedy_pick(pc, cols_out))
        return Occurrence{rows_chosen, cols_out};
      // No column witness for this complete row tuple; backtrack.
      --t;
      rows_chosen.pop_back();
      continue;
    }
    std::size_t limit = m.rows() - (pr - t);  // last row leaving room below
    std::size_t r = next_candidate[t];
    bool descended = false;
    for (; r <= limit; ++r) {
      copy_level(t, t + 1);
      apply_core_row(stack[t + 1], p, t, m, r);
      if (!stack[t + 1].greedy_exists(pc)) continue;
      rows_chosen.push_back(r);
      next_candidate[t] = r + 1;
      next_candidate[t + 1] = r + 1;
      ++t;
      descended = true;
      break;
    }
    if (descended) continue;
    if (t == 0) return std::nullopt;
    --t;
    rows_chosen.pop_back();
  }
}

bool is_free(const BinaryMatrix& m, std::span<const Pattern> patterns) {
  for (const Pattern& p : patterns)
    if (contains_pattern(m, p)) return false;
  return true;
}

bool is_free(const BinaryMatrix& m, std::initializer_list<Pattern> patterns) {
  return is_free(m, std::span<const Pattern>(patterns.begin(), patterns.size()));
}

BinaryMatrix hadamard(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw error(errc::dimension_mismatch, "hadamard factors differ in shape");
  if (a.row_labels() != b.row_labels() || a.col_labels() != b.col_labels())
    throw error(errc::label_mismatch, "hadamard factors differ in labels");
  BinaryMatrix out(a.rows(), a.cols(), a.row_labels(), a.col_labels());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto wa = a.row_bits(i);
    auto wb = b.row_bits(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::uint64_t bit = (wa[j / 64] & wb[j / 64]) >> (j % 64) & 1u;
      if (bit) out.set(i, j, true);
    }
  }
  return out;
}

BinaryMatrix permute(const BinaryMatrix& m, const Permutation& row_order,
                     const Permutation& col_order) {
  if (row_order.size() != m.rows() || col_order.size() != m.cols())
    throw error(errc::size_mismatch, "permutation sizes do not match matrix");
  std::vector<std::string> rl(m.rows()), cl(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rl[i] = m.row_labels()[row_order[i]];
  for (std::size_t j = 0; j < m.cols(); ++j) cl[j] = m.col_labels()[col_order[j]];
  BinaryMatrix out(m.rows(), m.cols(), std::move(rl), std::move(cl));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.get(row_order[i], col_order[j])) out.set(i, j, true);
  return out;
}

bool leq(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw error(errc::dimension_mismatch, "compared matrices differ in shape");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto wa = a.row_bits(i);
    auto wb = b.row_bits(i);
    for (std::size_t t = 0; t < a.words_per_row(); ++t)
      if (wa[t] & ~wb[t]) return false;
  }
  return true;
}

}  // namespace chain3
