// Timing comparison between the serial reference paths and the word-parallel /
// OpenMP lanes: pattern kernels vs the generic backtracking engine, ordering
// search and cross-validation at one thread vs all hardware threads, and the
// certified decomposition at scale.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chain3/catalog.hpp"
#include "chain3/decompose.hpp"
#include "chain3/generate.hpp"
#include "chain3/matrix.hpp"
#include "chain3/oracle.hpp"

using namespace chain3;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double timed(F&& body) {
  double start = now_seconds();
  body();
  return now_seconds() - start;
}

// Arranged product of three random chains: pattern-free but irregular, so
// proving absence costs the backtracking engine real exploration while the
// kernels stay one pass over the row pairs.
BinaryMatrix arranged_product(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ChainTriple triple = random_chain_triple(rows, cols, rng);
  auto [row_order, col_order] = order_from_chain_triple(triple.c1, triple.c2, triple.c3);
  return permute(hadamard(hadamard(triple.c1, triple.c2), triple.c3), row_order,
                 col_order);
}

BinaryMatrix diag_complement(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m.set(i, j, true);
  return m;
}

}  // namespace

int main() {
#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  std::printf("hardware threads: %d\n\n", threads);
  std::printf("%-46s %10s\n", "workload", "seconds");

  {
    BinaryMatrix m = arranged_product(300, 300, 3);
    volatile bool sink = false;
    double fast = timed([&] {
      sink = contains_pattern(m, gamma_pattern()) || contains_pattern(m, delta_pattern());
    });
    double general = timed([&] {
      sink = find_pattern(m, gamma_pattern()).has_value() ||
             find_pattern(m, delta_pattern()).has_value();
    });
    std::printf("%-46s %10.4f\n", "pattern screen 300x300, word kernels", fast);
    std::printf("%-46s %10.4f\n", "pattern screen 300x300, generic engine", general);
  }

  {
    BinaryMatrix m = diag_complement(5);
    const Pattern patterns[] = {gamma_pattern(), delta_pattern()};
    std::optional<std::pair<Permutation, Permutation>> serial_found, parallel_found;
    double serial = timed([&] {
      serial_found = search_free_ordering(m, patterns, {.budget = 7, .jobs = 1});
    });
    double parallel = timed([&] {
      parallel_found = search_free_ordering(m, patterns, {.budget = 7, .jobs = 0});
    });
    bool agree = serial_found == parallel_found;
    std::printf("%-46s %10.4f\n", "ordering search J5-I5, serial", serial);
    std::printf("%-46s %10.4f\n", "ordering search J5-I5, parallel", parallel);
    std::printf("%-46s %10s\n", "ordering search results agree", agree ? "yes" : "NO");
  }

  {
    CrossValidationReport serial_report, parallel_report;
    double serial = timed([&] { serial_report = cross_validate(3, 3, 1); });
    double parallel = timed([&] { parallel_report = cross_validate(3, 3, 0); });
    bool agree = serial_report.classes == parallel_report.classes &&
                 serial_report.freeable == parallel_report.freeable &&
                 serial_report.dim_le_3 == parallel_report.dim_le_3 &&
                 serial_report.discrepancies == parallel_report.discrepancies;
    std::printf("%-46s %10.4f\n", "cross-validate 3x3, serial", serial);
    std::printf("%-46s %10.4f\n", "cross-validate 3x3, parallel", parallel);
    std::printf("%-46s %10s\n", "cross-validate results agree", agree ? "yes" : "NO");
  }

  {
    std::mt19937_64 rng(7);
    ChainTriple triple = random_chain_triple(500, 500, rng);
    auto [rows, cols] = order_from_chain_triple(triple.c1, triple.c2, triple.c3);
    BinaryMatrix arranged =
        permute(hadamard(hadamard(triple.c1, triple.c2), triple.c3), rows, cols);
    bool certified = false;
    double elapsed = timed([&] { certified = decompose(arranged).certified; });
    std::printf("%-46s %10.4f\n", "certified decomposition 500x500", elapsed);
    std::printf("%-46s %10s\n", "decomposition certified", certified ? "yes" : "NO");
  }

  return 0;
}
