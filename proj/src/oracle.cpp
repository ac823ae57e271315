#include "chain3/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chain3/catalog.hpp"
#include "chain3/decompose.hpp"

namespace chain3 {

namespace {

int resolve_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs <= 0) return omp_get_max_threads();
  return jobs;
#else
  (void)jobs;
  return 1;
#endif
}

}  // namespace

bool is_feasible_zero_set(const BinaryMatrix& m, const ZeroSet& z) {
  std::set<std::pair<std::size_t, std::size_t>> members;
  for (auto [r, c] : z.cells) {
    if (r >= m.rows() || c >= m.cols())
      throw error(errc::index_out_of_bounds, "zero set cell out of range");
    if (m.get(r, c))
      throw error(errc::cell_not_zero,
                  "cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                      ") is not a zero");
    members.insert({r, c});
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells(members.begin(), members.end());
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      auto [ra, ca] = cells[a];
      auto [rb, cb] = cells[b];
      if (ra == rb || ca == cb) continue;
      bool corner1 = members.count({ra, cb}) > 0;
      bool corner2 = members.count({rb, ca}) > 0;
      if (!corner1 && !corner2) return false;
    }
  return true;
}

namespace {

struct ZeroUniverse {
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // row-major order

  explicit ZeroUniverse(const BinaryMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.get(i, j)) cells.push_back({i, j});
  }

  std::size_t index_of(std::size_t r, std::size_t c) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), std::make_pair(r, c));
    if (it == cells.end() || *it != std::make_pair(r, c)) return npos;
    return static_cast<std::size_t>(it - cells.begin());
  }
};

ZeroSet to_zero_set(const ZeroUniverse& universe, std::uint32_t mask) {
  ZeroSet z;
  for (std::size_t k = 0; k < universe.cells.size(); ++k)
    if (mask >> k & 1u) z.cells.push_back(universe.cells[k]);
  return z;
}

}  // namespace

DimensionCertificate ferrers_dimension(const BinaryMatrix& m, int d_max,
                                       std::size_t zero_budget) {
  ZeroUniverse universe(m);
  std::size_t z = universe.cells.size();
  std::size_t effective_budget = std::min<std::size_t>(zero_budget, 25);
  if (z > effective_budget)
    throw error(errc::budget_exceeded,
                "matrix has " + std::to_string(z) + " zeros, budget " +
                    std::to_string(effective_budget));

  DimensionCertificate cert;
  cert.d_max = d_max;
  if (z == 0) {
    cert.dimension = 0;
    return cert;
  }

  // Pair constraints: two cells in different rows and columns may share a
  // set only when at least one of their two corners (if it is a zero at all)
  // is in the set too.
  struct PairRule {
    std::uint32_t pair_mask;
    std::uint32_t corner_mask;
  };
  std::vector<PairRule> rules;
  for (std::size_t a = 0; a < z; ++a)
    for (std::size_t b = a + 1; b < z; ++b) {
      auto [ra, ca] = universe.cells[a];
      auto [rb, cb] = universe.cells[b];
      if (ra == rb || ca == cb) continue;
      std::uint32_t corners = 0;
      std::size_t c1 = universe.index_of(ra, cb);
      std::size_t c2 = universe.index_of(rb, ca);
      if (c1 != npos) corners |= std::uint32_t{1} << c1;
      if (c2 != npos) corners |= std::uint32_t{1} << c2;
      rules.push_back({(std::uint32_t{1} << a) | (std::uint32_t{1} << b), corners});
    }

  auto feasible = [&](std::uint32_t mask) {
    for (const PairRule& rule : rules)
      if ((mask & rule.pair_mask) == rule.pair_mask && !(mask & rule.corner_mask))
        return false;
    return true;
  };

  std::uint32_t full = (z == 32) ? ~std::uint32_t{0}
                                 : ((std::uint32_t{1} << z) - 1);
  std::vector<bool> feasible_map(std::size_t{1} << z);
  for (std::uint64_t mask = 0; mask <= full; ++mask)
    feasible_map[mask] = feasible(static_cast<std::uint32_t>(mask));

  // Maximal feasible sets cover at least as well as their subsets, so the
  // cover search ranges over them only.
  std::vector<std::uint32_t> maximal;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (!feasible_map[mask]) continue;
    bool is_max = true;
    for (std::size_t c = 0; c < z && is_max; ++c) {
      std::uint32_t bit = std::uint32_t{1} << c;
      if (!(mask & bit) && feasible_map[mask | bit]) is_max = false;
    }
    if (is_max) maximal.push_back(static_cast<std::uint32_t>(mask));
  }

  std::vector<std::vector<std::size_t>> containing(z);
  for (std::size_t s = 0; s < maximal.size(); ++s)
    for (std::size_t c = 0; c < z; ++c)
      if (maximal[s] >> c & 1u) containing[c].push_back(s);

  std::vector<std::uint32_t> chosen;
  std::function<bool(std::uint32_t, int)> dfs = [&](std::uint32_t covered,
                                                    int remaining) {
    if (covered == full) return true;
    if (remaining == 0) return false;
    // Branch on the uncovered cell with the fewest candidate sets.
    std::size_t best_cell = npos;
    std::size_t best_count = npos;
    for (std::size_t c = 0; c < z; ++c) {
      if (covered >> c & 1u) continue;
      if (containing[c].size() < best_count) {
        best_count = containing[c].size();
        best_cell = c;
      }
    }
    if (best_cell == npos || best_count == 0) return false;
    for (std::size_t s : containing[best_cell]) {
      chosen.push_back(maximal[s]);
      if (dfs(covered | maximal[s], remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (int d = 1; d <= d_max; ++d) {
    chosen.clear();
    if (dfs(0, d)) {
      cert.dimension = d;
      for (std::uint32_t mask : chosen) cert.cover.push_back(to_zero_set(universe, mask));
      return cert;
    }
  }
  return cert;  // exceeded d_max
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Permutations indexed in lexicographic order via the factorial number system.
std::vector<std::size_t> unrank_permutation(std::uint64_t index, std::size_t n) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t k = n; k-- > 0;) {
    std::uint64_t f = factorial(k);
    std::size_t digit = static_cast<std::size_t>(index / f);
    index %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

BinaryMatrix prefix_matrix(const BinaryMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
  BinaryMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (m.get(rows[i], cols[k])) out.set(i, k, true);
  return out;
}

// Lexicographically least pattern-free column order for fixed rows, built one
// column at a time; prefixes containing a pattern cannot be extended to a
// free order, so they are cut.
std::optional<std::vector<std::size_t>> free_column_order(
    const BinaryMatrix& m, const std::vector<std::size_t>& rows,
    std::span<const Pattern> patterns) {
  std::size_t n = m.cols();
  std::vector<std::size_t> chosen;
  std::vector<bool> used(n, false);
  std::function<bool()> dfs = [&]() {
    if (chosen.size() == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      chosen.push_back(c);
      used[c] = true;
      if (is_free(prefix_matrix(m, rows, chosen), patterns) && dfs()) return true;
      chosen.pop_back();
      used[c] = false;
    }
    return false;
  };
  if (dfs()) return chosen;
  return std::nullopt;
}

void check_search_budget(const BinaryMatrix& m, const SearchOptions& options) {
  if (m.rows() > options.budget || m.cols() > options.budget)
    throw error(errc::budget_exceeded,
                "ordering search budget " + std::to_string(options.budget) +
                    " exceeded by " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
}

}  // namespace

std::optional<std::pair<Permutation, Permutation>> search_free_ordering(
    const BinaryMatrix& m, std::span<const Pattern> patterns,
    const SearchOptions& options) {
  check_search_budget(m, options);
  std::uint64_t total = factorial(m.rows());
  int jobs = resolve_jobs(options.jobs);

  if (jobs == 1) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::size_t> rows = unrank_permutation(idx, m.rows());
      if (auto cols = free_column_order(m, rows, patterns))
        return std::make_pair(Permutation(std::move(rows)), Permutation(std::move(*cols)));
    }
    return std::nullopt;
  }

  // Parallel lane: scan row-order indices, keep the least index that admits a
  // free column order. Column orders are deterministic per row order, so the
  // reduced result matches the serial lane.
  std::atomic<std::uint64_t> best{~std::uint64_t{0}};
  std::optional<std::pair<Permutation, Permutation>> found;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
#endif
  for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
    std::uint64_t u = static_cast<std::uint64_t>(idx);
    if (u >= best.load(std::memory_order_relaxed)) continue;
    std::vector<std::size_t> rows = unrank_permutation(u, m.rows());
    auto cols = free_column_order(m, rows, patterns);
    if (!cols) continue;
#ifdef _OPENMP
#pragma omp critical(chain3_search_reduce)
#endif
    {
      if (u < best.load(std::memory_order_relaxed)) {
        best.store(u, std::memory_order_relaxed);
        found = std::make_pair(Permutation(rows), Permutation(*cols));
      }
    }
  }
  return found;
}

std::optional<std::pair<Permutation, Permutation>> search_free_ordering_exhaustive(
    const BinaryMatrix& m, std::span<const Pattern> patterns,
    const SearchOptions& options) {
  check_search_budget(m, options);
  std::uint64_t row_total = factorial(m.rows());
  std::uint64_t col_total = factorial(m.cols());
  for (std::uint64_t r = 0; r < row_total; ++r) {
    Permutation rows(unrank_permutation(r, m.rows()));
    for (std::uint64_t c = 0; c < col_total; ++c) {
      Permutation cols(unrank_permutation(c, m.cols()));
      if (is_free(permute(m, rows, cols), patterns))
        return std::make_pair(rows, cols);
    }
  }
  return std::nullopt;
}

namespace {

// Canonical code: row-major bits with cell (0,0) most significant, minimized
// over row orders after sorting columns lexicographically.
struct CanonicalCoder {
  std::size_t rows, cols;
  std::vector<std::vector<std::size_t>> row_orders;

  CanonicalCoder(std::size_t m, std::size_t n) : rows(m), cols(n) {
    std::uint64_t total = factorial(m);
    for (std::uint64_t idx = 0; idx < total; ++idx)
      row_orders.push_back(unrank_permutation(idx, m));
  }

  std::uint32_t canonical(std::uint32_t code) const {
    std::uint32_t best = ~std::uint32_t{0};
    std::vector<std::uint32_t> columns(cols);
    for (const auto& order : row_orders) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::uint32_t col = 0;
        for (std::size_t i = 0; i < rows; ++i) {
          std::size_t src = order[i];
          std::uint32_t bit = code >> (rows * cols - 1 - (src * cols + j)) & 1u;
          col = col << 1 | bit;
        }
        columns[j] = col;
      }
      std::sort(columns.begin(), columns.end());
      std::uint32_t candidate = 0;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          std::uint32_t bit = columns[j] >> (rows - 1 - i) & 1u;
          candidate = candidate << 1 | bit;
        }
      best = std::min(best, candidate);
    }
    return best;
  }

  BinaryMatrix to_matrix(std::uint32_t code) const {
    BinaryMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (code >> (rows * cols - 1 - (i * cols + j)) & 1u) m.set(i, j, true);
    return m;
  }
};

}  // namespace

void enumerate_bipartite(std::size_t rows, std::size_t cols,
                         const std::function<void(const BinaryMatrix&)>& emit) {
  if (rows == 0 || cols == 0)
    throw error(errc::empty_input, "dimensions must be positive");
  if (rows > 4 || cols > 4)
    throw error(errc::budget_exceeded, "canonical enumeration is capped at 4x4");
  CanonicalCoder coder(rows, cols);
  std::uint32_t total_codes = std::uint32_t{1} << (rows * cols);
  for (std::uint32_t code = 0; code < total_codes; ++code)
    if (coder.canonical(code) == code) emit(coder.to_matrix(code));
}

std::vector<BinaryMatrix> canonical_matrices(std::size_t rows, std::size_t cols) {
  std::vector<BinaryMatrix> out;
  enumerate_bipartite(rows, cols, [&](const BinaryMatrix& m) { out.push_back(m); });
  return out;
}

namespace {

bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  std::size_t k = combo.size();
  for (std::size_t t = k; t-- > 0;) {
    if (combo[t] + 1 <= n - (k - t)) {
      ++combo[t];
      for (std::size_t u = t + 1; u < k; ++u) combo[u] = combo[u - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> combo(k);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  return combo;
}

}  // namespace

std::optional<Occurrence> find_pattern_naive(const BinaryMatrix& m, const Pattern& p) {
  if (p.rows() > m.rows() || p.cols() > m.cols()) return std::nullopt;
  std::vector<std::size_t> rows = first_combination(p.rows());
  do {
    std::vector<std::size_t> cols = first_combination(p.cols());
    do {
      Occurrence occ{rows, cols};
      if (matches_at(m, p, occ)) return occ;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return std::nullopt;
}

namespace {

struct ClassOutcome {
  bool freeable = false;
  bool dim_le_3 = false;
  std::vector<std::string> problems;
};

std::string class_tag(std::size_t index, const BinaryMatrix& m) {
  std::ostringstream out;
  out << "class " << (index + 1) << " [";
  for (std::size_t i = 0; i < m.rows(); ++i) out << (i ? "/" : "") << m.row_string(i);
  out << "]";
  return out.str();
}

ClassOutcome examine_class(std::size_t index, const BinaryMatrix& m) {
  ClassOutcome outcome;
  const Pattern patterns[] = {gamma_pattern(), delta_pattern()};

  auto ordering = search_free_ordering(m, patterns, {.budget = 7, .jobs = 1});
  outcome.freeable = ordering.has_value();

  DimensionCertificate cert = ferrers_dimension(m, 4, 20);
  outcome.dim_le_3 = cert.dimension.has_value() && *cert.dimension <= 3;

  if (outcome.freeable != outcome.dim_le_3) {
    std::ostringstream out;
    out << class_tag(index, m) << ": ordering search says "
        << (outcome.freeable ? "freeable" : "not freeable") << " but dimension is ";
    if (cert.dimension)
      out << *cert.dimension;
    else
      out << "above " << cert.d_max;
    outcome.problems.push_back(out.str());
  }

  // Re-verify the certificate independently of the search that built it.
  if (cert.dimension && *cert.dimension > 0) {
    std::set<std::pair<std::size_t, std::size_t>> covered;
    bool all_feasible = true;
    for (const ZeroSet& zs : cert.cover) {
      if (!is_feasible_zero_set(m, zs)) all_feasible = false;
      covered.insert(zs.cells.begin(), zs.cells.end());
    }
    std::size_t zero_count = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.get(i, j)) ++zero_count;
    if (!all_feasible || covered.size() != zero_count ||
        cert.cover.size() != static_cast<std::size_t>(*cert.dimension))
      outcome.problems.push_back(class_tag(index, m) + ": certificate fails re-verification");
  }

  if (ordering) {
    try {
      BinaryMatrix arranged = permute(m, ordering->first, ordering->second);
      TripleDecomposition dec = decompose(arranged);
      if (!dec.certified)
        outcome.problems.push_back(class_tag(index, m) + ": decomposition not certified");
    } catch (const error& e) {
      outcome.problems.push_back(class_tag(index, m) +
                                 ": decomposition failed: " + e.what());
    }
  }
  return outcome;
}

}  // namespace

CrossValidationReport cross_validate(std::size_t rows, std::size_t cols, int jobs) {
  std::vector<BinaryMatrix> classes = canonical_matrices(rows, cols);
  CrossValidationReport report;
  report.m = rows;
  report.n = cols;
  report.classes = classes.size();

  std::vector<ClassOutcome> outcomes(classes.size());
  int threads = resolve_jobs(jobs);
  if (threads == 1) {
    for (std::size_t k = 0; k < classes.size(); ++k)
      outcomes[k] = examine_class(k, classes[k]);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long k = 0; k < static_cast<long long>(classes.size()); ++k)
      outcomes[static_cast<std::size_t>(k)] =
          examine_class(static_cast<std::size_t>(k), classes[static_cast<std::size_t>(k)]);
  }

  for (const ClassOutcome& outcome : outcomes) {
    report.freeable += outcome.freeable;
    report.dim_le_3 += outcome.dim_le_3;
    report.discrepancies.insert(report.discrepancies.end(), outcome.problems.begin(),
                                outcome.problems.end());
  }
  return report;
}

}  // namespace chain3
