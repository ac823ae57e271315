#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chain3/catalog.hpp"
#include "chain3/generate.hpp"
#include "chain3/matrix.hpp"
#include "chain3/oracle.hpp"

using namespace chain3;

namespace {

BinaryMatrix mk(const std::vector<std::string>& rows) {
  return BinaryMatrix::from_rows(rows);
}

BinaryMatrix ones_minus_identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m.set(i, j, true);
  return m;
}

ZeroSet zs(std::vector<std::pair<std::size_t, std::size_t>> cells) {
  return ZeroSet{std::move(cells)};
}

std::vector<std::pair<std::size_t, std::size_t>> zero_cells(const BinaryMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.get(i, j)) out.emplace_back(i, j);
  return out;
}

void check_certificate(const BinaryMatrix& m, const DimensionCertificate& cert) {
  REQUIRE(cert.dimension.has_value());
  CHECK(cert.cover.size() == static_cast<std::size_t>(*cert.dimension));
  std::set<std::pair<std::size_t, std::size_t>> covered;
  for (const ZeroSet& z : cert.cover) {
    CHECK(is_feasible_zero_set(m, z));
    covered.insert(z.cells.begin(), z.cells.end());
  }
  auto zeros = zero_cells(m);
  CHECK(covered == std::set(zeros.begin(), zeros.end()));
}

std::vector<Pattern> gamma_delta() {
  return {gamma_pattern(), delta_pattern()};
}

// Independent canonicalization: minimum row-string concatenation over every
// row and column permutation.
std::string orbit_min(const BinaryMatrix& m) {
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  std::string best;
  std::vector<std::size_t> rp = rows;
  do {
    std::vector<std::size_t> cp = cols;
    do {
      std::string s;
      for (std::size_t i : rp)
        for (std::size_t j : cp) s += m.get(i, j) ? '1' : '0';
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return best;
}

}  // namespace

TEST_SUITE("feasible zero sets") {
  TEST_CASE("frozen examples") {
    BinaryMatrix m = mk({"00", "10"});
    CHECK(is_feasible_zero_set(m, zs({})));
    CHECK(is_feasible_zero_set(m, zs({{0, 0}})));
    CHECK(is_feasible_zero_set(m, zs({{0, 0}, {0, 1}})));       // same row
    CHECK_FALSE(is_feasible_zero_set(m, zs({{0, 0}, {1, 1}})));  // both corners out
    CHECK(is_feasible_zero_set(m, zs({{0, 0}, {0, 1}, {1, 1}})));  // corner inside
  }

  TEST_CASE("cells must be zeros and in bounds") {
    BinaryMatrix m = mk({"01", "10"});
    try {
      is_feasible_zero_set(m, zs({{0, 1}}));
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::cell_not_zero);
    }
    try {
      is_feasible_zero_set(m, zs({{2, 0}}));
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::index_out_of_bounds);
    }
  }
}

TEST_SUITE("dimension oracle") {
  TEST_CASE("anchor values") {
    CHECK(*ferrers_dimension(mk({"11", "11"})).dimension == 0);
    CHECK(ferrers_dimension(mk({"11", "11"})).cover.empty());
    CHECK(*ferrers_dimension(mk({"0"})).dimension == 1);
    CHECK(*ferrers_dimension(mk({"11", "01"})).dimension == 1);
    CHECK(*ferrers_dimension(mk({"01", "10"})).dimension == 2);
    CHECK(*ferrers_dimension(ones_minus_identity(3)).dimension == 3);
    CHECK(*ferrers_dimension(ones_minus_identity(4)).dimension == 4);
  }

  TEST_CASE("d_max cutoffs") {
    DimensionCertificate cert = ferrers_dimension(ones_minus_identity(5));
    CHECK(cert.exceeded());
    CHECK(cert.d_max == 4);
    CHECK(cert.cover.empty());
    CHECK(ferrers_dimension(ones_minus_identity(3), 2).exceeded());
    CHECK_FALSE(ferrers_dimension(ones_minus_identity(3), 3).exceeded());
  }

  TEST_CASE("zero budget") {
    try {
      ferrers_dimension(BinaryMatrix(5, 5));  // 25 zeros over the default 20
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::budget_exceeded);
    }
    try {
      ferrers_dimension(BinaryMatrix(4, 3), 4, 10);  // 12 zeros over a lowered budget
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::budget_exceeded);
    }
    // All-zero matrices need one set: the full zero set has every corner inside.
    CHECK(*ferrers_dimension(BinaryMatrix(4, 5)).dimension == 1);  // exactly 20 zeros
    CHECK(*ferrers_dimension(BinaryMatrix(4, 3)).dimension == 1);
  }

  TEST_CASE("certificates verify on random instances") {
    std::mt19937_64 rng(11);
    int verified = 0;
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
      BinaryMatrix m = random_matrix(rows, cols, 0.5, rng);
      DimensionCertificate cert = ferrers_dimension(m);
      if (cert.exceeded()) continue;
      check_certificate(m, cert);
      CHECK(*cert.dimension <= static_cast<int>(std::min(rows, cols)));
      ++verified;
    }
    CHECK(verified > 80);
  }
}

TEST_SUITE("ordering search") {
  TEST_CASE("already-free input returns the identity pair") {
    BinaryMatrix m = ones_minus_identity(3);
    std::vector<Pattern> pats = gamma_delta();
    auto found = search_free_ordering(m, pats);
    REQUIRE(found.has_value());
    CHECK(found->first == Permutation::identity(3));
    CHECK(found->second == Permutation::identity(3));
  }

  TEST_CASE("dimension-four input has no free ordering") {
    BinaryMatrix m = ones_minus_identity(4);
    std::vector<Pattern> pats = gamma_delta();
    CHECK_FALSE(search_free_ordering(m, pats).has_value());
    CHECK_FALSE(search_free_ordering_exhaustive(m, pats).has_value());
  }

  TEST_CASE("pruned search equals the exhaustive reference") {
    std::mt19937_64 rng(17);
    std::vector<Pattern> pats = gamma_delta();
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 3;
      BinaryMatrix m = random_matrix(rows, cols, 0.5, rng);
      auto fast = search_free_ordering(m, pats);
      auto slow = search_free_ordering_exhaustive(m, pats);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        CHECK(fast->first == slow->first);
        CHECK(fast->second == slow->second);
      }
    }
  }

  TEST_CASE("parallel search matches serial") {
    std::mt19937_64 rng(19);
    std::vector<Pattern> pats = gamma_delta();
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
      BinaryMatrix m = random_matrix(rows, cols, 0.45, rng);
      auto serial = search_free_ordering(m, pats, {.budget = 7, .jobs = 1});
      auto parallel = search_free_ordering(m, pats, {.budget = 7, .jobs = 4});
      REQUIRE(serial.has_value() == parallel.has_value());
      if (serial) {
        CHECK(serial->first == parallel->first);
        CHECK(serial->second == parallel->second);
      }
    }
  }

  TEST_CASE("dimension budget") {
    BinaryMatrix tall = mk({"000", "100", "100", "110", "110", "111", "111", "111"});
    std::vector<Pattern> pats = gamma_delta();
    try {
      search_free_ordering(tall, pats);
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::budget_exceeded);
    }
    auto found = search_free_ordering(tall, pats, {.budget = 8, .jobs = 1});
    REQUIRE(found.has_value());
    CHECK(found->first == Permutation::identity(8));
    CHECK(found->second == Permutation::identity(3));
  }
}

TEST_SUITE("canonical enumeration") {
  TEST_CASE("class counts") {
    CHECK(canonical_matrices(1, 1).size() == 2);
    CHECK(canonical_matrices(1, 2).size() == 3);
    CHECK(canonical_matrices(2, 2).size() == 7);
    CHECK(canonical_matrices(2, 3).size() == 13);
    CHECK(canonical_matrices(3, 3).size() == 36);
    CHECK(canonical_matrices(4, 4).size() == 317);
  }

  TEST_CASE("representatives hit every orbit exactly once") {
    std::set<std::string> orbit_of_rep;
    for (const BinaryMatrix& rep : canonical_matrices(2, 3))
      CHECK(orbit_of_rep.insert(orbit_min(rep)).second);  // distinct orbits

    std::set<std::string> all_orbits;
    for (unsigned code = 0; code < 64; ++code) {
      BinaryMatrix m(2, 3);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (code >> (i * 3 + j) & 1u) m.set(i, j, true);
      all_orbits.insert(orbit_min(m));
    }
    CHECK(orbit_of_rep == all_orbits);
  }

  TEST_CASE("size limits") {
    try {
      canonical_matrices(5, 2);
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::budget_exceeded);
    }
  }
}

TEST_SUITE("cross validation") {
  TEST_CASE("small boards agree everywhere") {
    CrossValidationReport r = cross_validate(2, 2);
    CHECK(r.classes == 7);
    CHECK(r.freeable == 7);
    CHECK(r.dim_le_3 == 7);
    CHECK(r.discrepancies.empty());

    r = cross_validate(3, 3);
    CHECK(r.classes == 36);
    CHECK(r.freeable == 36);
    CHECK(r.dim_le_3 == 36);
    CHECK(r.discrepancies.empty());
  }

  TEST_CASE("parallel run matches serial") {
    CrossValidationReport serial = cross_validate(3, 2, 1);
    CrossValidationReport parallel = cross_validate(3, 2, 4);
    CHECK(serial.classes == parallel.classes);
    CHECK(serial.freeable == parallel.freeable);
    CHECK(serial.dim_le_3 == parallel.dim_le_3);
    CHECK(serial.discrepancies == parallel.discrepancies);
  }

  TEST_CASE("freeable equals low dimension on random four-by-fours") {
    std::mt19937_64 rng(29);
    std::vector<Pattern> pats = gamma_delta();
    for (int trial = 0; trial < 60; ++trial) {
      BinaryMatrix m = random_matrix(4, 4, 0.5, rng);
      bool freeable = search_free_ordering(m, pats).has_value();
      DimensionCertificate cert = ferrers_dimension(m);
      REQUIRE_FALSE(cert.exceeded());
      CHECK(freeable == (*cert.dimension <= 3));
    }
  }
}
