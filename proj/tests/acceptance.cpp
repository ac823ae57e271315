// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs the full desk-scale cross-validation, the frozen anchor
// matrices, large sampled workloads, and the timed 500x500 decomposition.

#include <chrono>
#include <cstddef>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chain3/catalog.hpp"
#include "chain3/chain.hpp"
#include "chain3/decompose.hpp"
#include "chain3/generate.hpp"
#include "chain3/geometry.hpp"
#include "chain3/matrix.hpp"
#include "chain3/oracle.hpp"

using namespace chain3;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

BinaryMatrix ones_minus_identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m.set(i, j, true);
  return m;
}

bool all_checks_pass(const TripleDecomposition& dec) {
  for (const auto& [name, ok] : dec.checks)
    if (!ok) return false;
  return dec.certified;
}

// Criterion: every canonical class on boards up to 4x4 cross-validates with
// zero discrepancies, within the time budget.
bool run_cross_validation(std::string& detail) {
  double start = now_seconds();
  std::size_t boards = 0, classes = 0;
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) {
      CrossValidationReport report = cross_validate(m, n);
      ++boards;
      classes += report.classes;
      if (!report.discrepancies.empty()) {
        detail = std::to_string(report.discrepancies.size()) + " discrepancies on " +
                 std::to_string(m) + "x" + std::to_string(n) + "; first: " +
                 report.discrepancies.front();
        return false;
      }
    }
  double elapsed = now_seconds() - start;
  std::ostringstream out;
  out << boards << " boards, " << classes << " classes, " << elapsed << " s";
  detail = out.str();
  return elapsed < 900.0;
}

// Criterion: the canonical anchors have exact dimensions three and four; the
// four-dimensional one survives the full 576-ordering sweep unfreed.
bool run_anchors(std::string& detail) {
  std::vector<Pattern> pats{gamma_pattern(), delta_pattern()};
  BinaryMatrix tri = ones_minus_identity(3);
  DimensionCertificate c3 = ferrers_dimension(tri);
  if (!c3.dimension || *c3.dimension != 3) {
    detail = "3x3 anchor dimension is not 3";
    return false;
  }
  if (!is_free(tri, pats)) {
    detail = "3x3 anchor is not pattern-free in its given order";
    return false;
  }
  if (!search_free_ordering(tri, pats)) {
    detail = "ordering search missed the 3x3 anchor";
    return false;
  }

  BinaryMatrix quad = ones_minus_identity(4);
  DimensionCertificate c4 = ferrers_dimension(quad);
  if (!c4.dimension || *c4.dimension != 4) {
    detail = "4x4 anchor dimension is not 4";
    return false;
  }
  if (search_free_ordering_exhaustive(quad, pats)) {
    detail = "4x4 anchor claims a pattern-free ordering";
    return false;
  }
  detail = "dimensions 3 and 4 exact; 576-ordering sweep found nothing";
  return true;
}

// Shared sampling loop for the two thousand-instance criteria.
template <typename Check>
bool run_sampled(std::string& detail, Check&& check) {
  std::mt19937_64 rng(20250817);
  for (int k = 0; k < 1000; ++k) {
    std::size_t rows = 1 + rng() % 50, cols = 1 + rng() % 50;
    ChainTriple t = random_chain_triple(rows, cols, rng);
    BinaryMatrix product = hadamard(hadamard(t.c1, t.c2), t.c3);
    auto [row_order, col_order] = order_from_chain_triple(t.c1, t.c2, t.c3);
    BinaryMatrix arranged = permute(product, row_order, col_order);
    std::string why;
    if (!check(arranged, why)) {
      detail = "instance " + std::to_string(k + 1) + " (" + std::to_string(rows) +
               "x" + std::to_string(cols) + "): " + why;
      return false;
    }
  }
  detail = "1000 instances up to 50x50, zero failures";
  return true;
}

// Criterion: every sampled triple product, arranged by the derived orders, is
// pattern-free and decomposes with every certification check green.
bool run_sampled_decompositions(std::string& detail) {
  std::vector<Pattern> pats{gamma_pattern(), delta_pattern()};
  return run_sampled(detail, [&](const BinaryMatrix& arranged, std::string& why) {
    if (!is_free(arranged, pats)) {
      why = "arranged product still contains a pattern";
      return false;
    }
    try {
      TripleDecomposition dec = decompose(arranged);
      if (!all_checks_pass(dec)) {
        why = "decomposition not certified";
        return false;
      }
    } catch (const error& e) {
      why = e.what();
      return false;
    }
    return true;
  });
}

// Criterion: the three-dimensional model of every sampled decomposition
// reproduces its matrix exactly.
bool run_sampled_models(std::string& detail) {
  return run_sampled(detail, [&](const BinaryMatrix& arranged, std::string& why) {
    try {
      TripleDecomposition dec = decompose(arranged);
      OrthantModel model = orthant_model(dec);
      if (!verify_model(model, arranged)) {
        why = "model does not reproduce the matrix";
        return false;
      }
    } catch (const error& e) {
      why = e.what();
      return false;
    }
    return true;
  });
}

// Criterion: the word-kernel pattern search agrees with the subset-enumeration
// reference on presence and on the exact witness.
bool run_pattern_reference(std::string& detail) {
  std::mt19937_64 rng(9157);
  const std::vector<NamedPattern>& catalog = pattern_catalog();
  const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  std::size_t hits = 0;
  for (int k = 0; k < 10000; ++k) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    BinaryMatrix m = random_matrix(rows, cols, densities[k % 5], rng);
    const Pattern& p = catalog[k % catalog.size()].pattern;
    auto fast = find_pattern(m, p);
    auto naive = find_pattern_naive(m, p);
    if (fast.has_value() != naive.has_value() ||
        (fast && !(*fast == *naive)) ||
        contains_pattern(m, p) != naive.has_value()) {
      detail = "trial " + std::to_string(k + 1) + " (" + catalog[k % catalog.size()].name +
               ") disagrees with the reference";
      return false;
    }
    hits += naive.has_value();
  }
  detail = "10000 trials, " + std::to_string(hits) + " with embeddings, full agreement";
  return true;
}

// Criterion: a 500x500 pre-ordered triple product decomposes, certified,
// within five seconds.
bool run_large_decomposition(std::string& detail) {
  std::mt19937_64 rng(424242);
  ChainTriple t = random_chain_triple(500, 500, rng);
  BinaryMatrix product = hadamard(hadamard(t.c1, t.c2), t.c3);
  auto [row_order, col_order] = order_from_chain_triple(t.c1, t.c2, t.c3);
  BinaryMatrix arranged = permute(product, row_order, col_order);

  double start = now_seconds();
  TripleDecomposition dec = decompose(arranged);
  double elapsed = now_seconds() - start;

  std::ostringstream out;
  out << "500x500 decomposition in " << elapsed << " s";
  detail = out.str();
  if (!all_checks_pass(dec)) {
    detail += "; not certified";
    return false;
  }
  if (hadamard(hadamard(dec.a1, dec.a2), dec.a3) != arranged) {
    detail += "; product mismatch";
    return false;
  }
  return elapsed < 5.0;
}

// Criterion: across every canonical class up to 4x4, chain recognition,
// dimension at most one, and single-cell-pattern freeability coincide; and
// dimension at most two coincides with two-row-pattern freeability.
bool run_low_dimensions(std::string& detail) {
  std::vector<Pattern> step{chain_alt_pattern()};
  std::vector<Pattern> two_step{d_pattern()};
  std::size_t classes = 0;
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      for (const BinaryMatrix& cls : canonical_matrices(m, n)) {
        ++classes;
        DimensionCertificate cert = ferrers_dimension(cls);
        if (!cert.dimension) {
          detail = "class with undecided dimension on " + std::to_string(m) + "x" +
                   std::to_string(n);
          return false;
        }
        bool chain = is_chain(cls);
        bool dim1 = *cert.dimension <= 1;
        bool step_free = search_free_ordering(cls, step).has_value();
        bool dim2 = *cert.dimension <= 2;
        bool two_free = search_free_ordering(cls, two_step).has_value();
        if (chain != dim1 || dim1 != step_free || dim2 != two_free) {
          std::ostringstream out;
          out << "disagreement on " << m << "x" << n << " class [";
          for (std::size_t i = 0; i < cls.rows(); ++i)
            out << (i ? "/" : "") << cls.row_string(i);
          out << "]: chain=" << chain << " dim1=" << dim1 << " step_free=" << step_free
              << " dim2=" << dim2 << " two_free=" << two_free;
          detail = out.str();
          return false;
        }
      }
  detail = std::to_string(classes) + " classes consistent";
  return true;
}

struct Criterion {
  const char* name;
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"cross-validation on all boards up to 4x4", run_cross_validation},
      {"anchor matrices have exact dimensions 3 and 4", run_anchors},
      {"sampled triple products decompose certified", run_sampled_decompositions},
      {"sampled decompositions model exactly in 3d", run_sampled_models},
      {"pattern search agrees with the enumeration reference", run_pattern_reference},
      {"large pre-ordered decomposition stays under 5 s", run_large_decomposition},
      {"chain and low-dimension classifications coincide", run_low_dimensions},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << criterion.name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << '\n';
    failures += !ok;
  }
  if (failures) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
