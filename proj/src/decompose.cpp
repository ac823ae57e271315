#include "chain3/decompose.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "chain3/catalog.hpp"
#include "chain3/chain.hpp"

namespace chain3 {

namespace {

std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void check_covered_support(const BinaryMatrix& ones, const BinaryMatrix& covered) {
  std::size_t m = ones.rows(), n = ones.cols();
  std::vector<char> one_above(n, 0);
  std::vector<char> one_right(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    bool seen = false;
    for (std::size_t j = n; j-- > 0;) {
      one_right[j] = seen;
      if (ones.get(i, j)) seen = true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (covered.get(i, j) && (!one_above[j] || !one_right[j]))
        throw error(errc::invariant_violation,
                    "covered zero at " + cell_name(i, j) +
                        " lacks a one above or to its right");
      if (ones.get(i, j)) one_above[j] = 1;
    }
  }
}

}  // namespace

AnnotatedMatrix::AnnotatedMatrix(BinaryMatrix ones, BinaryMatrix covered)
    : ones_(std::move(ones)), covered_(std::move(covered)) {}

AnnotatedMatrix AnnotatedMatrix::build(const BinaryMatrix& ones,
                                       const BinaryMatrix& covered) {
  if (ones.rows() != covered.rows() || ones.cols() != covered.cols())
    throw error(errc::dimension_mismatch, "annotation layers differ in shape");
  for (std::size_t i = 0; i < ones.rows(); ++i)
    for (std::size_t j = 0; j < ones.cols(); ++j)
      if (ones.get(i, j) && covered.get(i, j))
        throw error(errc::invariant_violation,
                    "cell " + cell_name(i, j) + " marked both one and covered zero");
  check_covered_support(ones, covered);
  return AnnotatedMatrix(ones, covered);
}

AnnotatedMatrix AnnotatedMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw error(errc::empty_input, "no annotated rows given");
  std::size_t cols = rows.front().size();
  BinaryMatrix ones(rows.size(), cols);
  BinaryMatrix covered(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw error(errc::ragged_rows, "rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) {
      switch (rows[i][j]) {
        case '1': ones.set(i, j, true); break;
        case '0': break;
        case '*': covered.set(i, j, true); break;
        default:
          throw error(errc::illegal_character,
                      std::string("unexpected character '") + rows[i][j] +
                          "' in annotated row");
      }
    }
  }
  return build(ones, covered);
}

AnnotatedCell AnnotatedMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows() || j >= cols())
    throw error(errc::index_out_of_bounds, "annotated index out of range");
  if (ones_.get(i, j)) return AnnotatedCell::one;
  return covered_.get(i, j) ? AnnotatedCell::zero_covered : AnnotatedCell::zero_plain;
}

std::vector<std::string> AnnotatedMatrix::to_row_strings() const {
  std::vector<std::string> out(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    std::string row(cols(), '0');
    for (std::size_t j = 0; j < cols(); ++j) {
      if (ones_.get(i, j)) row[j] = '1';
      else if (covered_.get(i, j)) row[j] = '*';
    }
    out[i] = std::move(row);
  }
  return out;
}

BinaryMatrix build_a1(const BinaryMatrix& a) {
  BinaryMatrix out(a.rows(), a.cols(), a.row_labels(), a.col_labels());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool seen = false;
    for (std::size_t j = a.cols(); j-- > 0;) {
      if (a.get(i, j)) seen = true;
      if (seen) out.set(i, j, true);
    }
  }
  return out;
}

BinaryMatrix build_a2(const BinaryMatrix& a) {
  BinaryMatrix out(a.rows(), a.cols(), a.row_labels(), a.col_labels());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool seen = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a.get(i, j)) seen = true;
      if (seen) out.set(i, j, true);
    }
  }
  return out;
}

AnnotatedMatrix annotate(const BinaryMatrix& a, const BinaryMatrix& a12) {
  if (a.rows() != a12.rows() || a.cols() != a12.cols())
    throw error(errc::dimension_mismatch, "annotation inputs differ in shape");
  if (!leq(a, a12))
    throw error(errc::not_dominated, "matrix exceeds its closure product");
  BinaryMatrix covered(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.get(i, j) && a12.get(i, j)) covered.set(i, j, true);
  BinaryMatrix ones(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) ones.set(i, j, true);
  return AnnotatedMatrix::build(ones, covered);
}

namespace {

// Row-indexed bitsets (one word block per column) for the reordering pass.
struct ColumnSets {
  std::size_t words;
  std::vector<std::uint64_t> ones, covered;

  explicit ColumnSets(const AnnotatedMatrix& at) : words((at.rows() + 63) / 64) {
    ones.assign(at.cols() * words, 0);
    covered.assign(at.cols() * words, 0);
    for (std::size_t i = 0; i < at.rows(); ++i)
      for (std::size_t j = 0; j < at.cols(); ++j) {
        if (at.one(i, j)) ones[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
        if (at.covered(i, j)) covered[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
  }

  bool intersects(std::size_t col_a_ones, std::size_t col_b_covered) const {
    const std::uint64_t* a = ones.data() + col_a_ones * words;
    const std::uint64_t* b = covered.data() + col_b_covered * words;
    for (std::size_t t = 0; t < words; ++t)
      if (a[t] & b[t]) return true;
    return false;
  }

  bool any_covered(std::size_t col) const {
    const std::uint64_t* b = covered.data() + col * words;
    for (std::size_t t = 0; t < words; ++t)
      if (b[t]) return true;
    return false;
  }
};

}  // namespace

Permutation algorithm1(const AnnotatedMatrix& at) {
  ColumnSets sets(at);
  std::vector<std::size_t> listed;
  listed.reserve(at.cols());
  for (std::size_t j = 0; j < at.cols(); ++j) {
    listed.push_back(j);
    if (!sets.any_covered(j)) continue;
    // Leftmost listed column with a one in a row where column j has a
    // covered zero; j itself never qualifies since its ones and covered
    // rows are disjoint.
    std::size_t target = npos;
    for (std::size_t pos = 0; pos < listed.size(); ++pos) {
      if (sets.intersects(listed[pos], j)) {
        target = pos;
        break;
      }
    }
    if (target == npos) continue;  // leave j at the end
    listed.pop_back();
    listed.insert(listed.begin() + static_cast<std::ptrdiff_t>(target), j);
  }
  return Permutation(std::move(listed));
}

bool reorder_clean(const AnnotatedMatrix& at, const Permutation& l3) {
  if (l3.size() != at.cols())
    throw error(errc::size_mismatch, "column order does not match matrix");
  for (std::size_t i = 0; i < at.rows(); ++i) {
    bool seen_one = false;
    for (std::size_t pos = 0; pos < l3.size(); ++pos) {
      std::size_t j = l3[pos];
      if (at.one(i, j)) seen_one = true;
      else if (at.covered(i, j) && seen_one) return false;
    }
  }
  return true;
}

BinaryMatrix build_a3(const AnnotatedMatrix& at, const Permutation& l3) {
  if (l3.size() != at.cols())
    throw error(errc::size_mismatch, "column order does not match matrix");
  BinaryMatrix out(at.rows(), at.cols());
  for (std::size_t i = 0; i < at.rows(); ++i) {
    bool seen_one = false;
    for (std::size_t pos = 0; pos < l3.size(); ++pos) {
      std::size_t j = l3[pos];
      if (!seen_one && at.one(i, j)) seen_one = true;
      if (seen_one) out.set(i, j, true);
    }
  }
  return out;
}

namespace {

// Per-row cell masks (one, covered zero, plain zero) packed into words, used
// to test the forbidden two-by-two configurations one row pair at a time.
struct LayerRows {
  std::size_t words;
  std::uint64_t tail;
  const AnnotatedMatrix& at;
  std::vector<std::uint64_t> scratch;

  explicit LayerRows(const AnnotatedMatrix& m)
      : words(m.ones().words_per_row()), at(m), scratch(2 * words) {
    tail = (m.cols() % 64) ? ((std::uint64_t{1} << (m.cols() % 64)) - 1)
                           : ~std::uint64_t{0};
  }

  // dst := cell mask for the requirement (nullopt = anything) at row i.
  void fill(std::uint64_t* dst, std::optional<AnnotatedCell> req, std::size_t i) {
    auto one = at.ones().row_bits(i);
    auto cov = at.covered_zeros().row_bits(i);
    for (std::size_t t = 0; t < words; ++t) {
      if (!req)
        dst[t] = ~std::uint64_t{0};
      else if (*req == AnnotatedCell::one)
        dst[t] = one[t];
      else if (*req == AnnotatedCell::zero_covered)
        dst[t] = cov[t];
      else
        dst[t] = ~(one[t] | cov[t]);
    }
    dst[words - 1] &= tail;
  }

  void intersect(std::uint64_t* dst, std::optional<AnnotatedCell> req, std::size_t i) {
    fill(scratch.data() + words, req, i);
    for (std::size_t t = 0; t < words; ++t) dst[t] &= scratch[words + t];
  }

  // Least j with bit set at or past `from`, or npos.
  std::size_t first_at_or_after(const std::uint64_t* w, std::size_t from) const {
    std::size_t wi = from / 64;
    if (wi >= words) return npos;
    std::uint64_t cur = w[wi] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (cur) return wi * 64 + static_cast<std::size_t>(std::countr_zero(cur));
      if (++wi >= words) return npos;
      cur = w[wi];
    }
  }
};

}  // namespace

std::optional<std::string> annotated_violation(const AnnotatedMatrix& at) {
  std::size_t m = at.rows();
  struct Config {
    std::optional<AnnotatedCell> top_left, bottom_left, top_right, bottom_right;
    const char* name;
  };
  static const Config configs[] = {
      {AnnotatedCell::zero_covered, AnnotatedCell::one, AnnotatedCell::one,
       AnnotatedCell::zero_covered, "covered-one over one-covered"},
      {AnnotatedCell::one, AnnotatedCell::zero_covered, AnnotatedCell::zero_covered,
       AnnotatedCell::one, "one-covered over covered-one"},
      {AnnotatedCell::one, AnnotatedCell::zero_plain, std::nullopt,
       AnnotatedCell::one, "one over plain zero left of a one"},
      {AnnotatedCell::zero_covered, AnnotatedCell::zero_plain, std::nullopt,
       AnnotatedCell::zero_covered, "covered over plain zero left of a covered"},
  };
  LayerRows layers(at);
  std::vector<std::uint64_t> left(layers.words), right(layers.words);
  for (std::size_t i1 = 0; i1 < m; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < m; ++i2)
      for (const Config& cfg : configs) {
        layers.fill(left.data(), cfg.top_left, i1);
        layers.intersect(left.data(), cfg.bottom_left, i2);
        std::size_t j1 = layers.first_at_or_after(left.data(), 0);
        if (j1 == npos) continue;
        layers.fill(right.data(), cfg.top_right, i1);
        layers.intersect(right.data(), cfg.bottom_right, i2);
        std::size_t j2 = layers.first_at_or_after(right.data(), j1 + 1);
        if (j2 == npos) continue;
        std::ostringstream out;
        out << cfg.name << " at rows " << (i1 + 1) << "," << (i2 + 1) << " cols "
            << (j1 + 1) << "," << (j2 + 1);
        return out.str();
      }
  return std::nullopt;
}

TripleDecomposition decompose(const BinaryMatrix& a) {
  // Existence first via the word kernels; the witness search only runs on
  // matrices already known to contain the pattern.
  for (const Pattern* p : {&gamma_pattern(), &delta_pattern()}) {
    if (contains_pattern(a, *p))
      throw not_free_error(p == &gamma_pattern() ? "gamma" : "delta",
                           *find_pattern(a, *p));
  }

  BinaryMatrix a1 = build_a1(a);
  BinaryMatrix a2 = build_a2(a);
  BinaryMatrix a12 = hadamard(a1, a2);

  TripleDecomposition result{a1, a2, a, Permutation::identity(a.cols()), {}, false};
  auto record = [&](const std::string& name, bool ok) {
    result.checks.emplace_back(name, ok);
    if (!ok)
      throw error(errc::invariant_violation, "decomposition check failed: " + name);
  };

  record("input_pattern_free", true);
  record("closure_product_dominates", leq(a, a12));

  AnnotatedMatrix at = annotate(a, a12);  // validates covered-zero support
  record("covered_zero_support", true);
  record("annotation_pairs_clean", !annotated_violation(at).has_value());

  Permutation l3 = algorithm1(at);
  record("reorder_no_one_before_covered_zero", reorder_clean(at, l3));

  BinaryMatrix a3 = build_a3(at, l3);
  a3.set_labels(a.row_labels(), a.col_labels());
  record("factors_are_chains", is_chain(a1) && is_chain(a2) && is_chain(a3));
  record("product_equals_input", hadamard(a12, a3) == a);

  result.a3 = std::move(a3);
  result.l3 = std::move(l3);
  result.certified = true;
  return result;
}

std::pair<Permutation, Permutation> order_from_chain_triple(const BinaryMatrix& c1,
                                                            const BinaryMatrix& c2,
                                                            const BinaryMatrix& c3) {
  const BinaryMatrix* factors[] = {&c1, &c2, &c3};
  const char* names[] = {"first", "second", "third"};
  for (int k = 1; k < 3; ++k) {
    if (factors[k]->rows() != c1.rows() || factors[k]->cols() != c1.cols())
      throw error(errc::dimension_mismatch, "chain factors differ in shape");
    if (factors[k]->row_labels() != c1.row_labels() ||
        factors[k]->col_labels() != c1.col_labels())
      throw error(errc::label_mismatch, "chain factors differ in labels");
  }
  for (int k = 0; k < 3; ++k)
    if (!is_chain(*factors[k]))
      throw error(errc::not_chain,
                  std::string(names[k]) + " factor is not a chain graph");

  BinaryMatrix product12 = hadamard(c1, c2);

  // Primary choice: first factor's rows nested increasingly downward, second
  // factor's columns nested decreasingly rightward; remaining direction
  // combinations are fallbacks.
  const std::pair<NestDirection, NestDirection> combos[] = {
      {NestDirection::increasing, NestDirection::decreasing},
      {NestDirection::increasing, NestDirection::increasing},
      {NestDirection::decreasing, NestDirection::decreasing},
      {NestDirection::decreasing, NestDirection::increasing},
  };
  for (auto [row_dir, col_dir] : combos) {
    auto rows = chain_ordering(c1, row_dir, NestDirection::increasing);
    auto cols = chain_ordering(c2, NestDirection::increasing, col_dir);
    if (!rows || !cols) continue;
    Permutation row_order = rows->row_order;
    Permutation col_order = cols->col_order;
    if (contains_pattern(permute(product12, row_order, col_order), d_pattern()))
      continue;
    BinaryMatrix full = permute(hadamard(product12, c3), row_order, col_order);
    if (!is_free(full, {gamma_pattern(), delta_pattern()}))
      throw error(errc::invariant_violation,
                  "ordered triple product contains a forbidden pattern");
    return {std::move(row_order), std::move(col_order)};
  }
  throw error(errc::invariant_violation,
              "no nesting direction yields a two-factor product free of the "
              "two-chain pattern");
}

}  // namespace chain3
