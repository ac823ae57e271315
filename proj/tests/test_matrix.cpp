#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "chain3/catalog.hpp"
#include "chain3/matrix.hpp"
#include "chain3/oracle.hpp"

using namespace chain3;

namespace {

BinaryMatrix mk(const std::vector<std::string>& rows) {
  return BinaryMatrix::from_rows(rows);
}

Pattern pat(const std::vector<std::string>& rows) { return Pattern::from_rows(rows); }

}  // namespace

TEST_SUITE("parsing") {
  TEST_CASE("rows with comments and blanks") {
    BinaryMatrix m = parse_matrix("# header\n\n01\n10\n");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK_FALSE(m.get(0, 0));
    CHECK(m.get(0, 1));
    CHECK(m.get(1, 0));
    CHECK_FALSE(m.get(1, 1));
    CHECK(m.row_labels() == std::vector<std::string>{"u1", "u2"});
    CHECK(m.col_labels() == std::vector<std::string>{"v1", "v2"});
  }

  TEST_CASE("labels line") {
    BinaryMatrix m = parse_matrix("labels: a,b ; x,y,z\n011\n101\n");
    CHECK(m.row_labels() == std::vector<std::string>{"a", "b"});
    CHECK(m.col_labels() == std::vector<std::string>{"x", "y", "z"});
  }

  TEST_CASE("windows line endings") {
    BinaryMatrix m = parse_matrix("01\r\n10\r\n");
    CHECK(m.rows() == 2);
    CHECK(m.get(1, 0));
  }

  TEST_CASE("ragged rows rejected") {
    CHECK_THROWS_WITH_AS(parse_matrix("01\n011\n"), "rows differ in length", error);
    try {
      parse_matrix("01\n011\n");
    } catch (const error& e) {
      CHECK(e.code() == errc::ragged_rows);
    }
  }

  TEST_CASE("illegal characters rejected") {
    try {
      parse_matrix("01\n0x\n");
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::illegal_character);
    }
    // '*' belongs to patterns only
    try {
      parse_matrix("0*\n");
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::illegal_character);
    }
  }

  TEST_CASE("empty input rejected") {
    try {
      parse_matrix("# only a comment\n\n");
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::empty_input);
    }
  }

  TEST_CASE("label count and duplicates rejected") {
    try {
      parse_matrix("labels: a ; x,y\n01\n10\n");
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::label_mismatch);
    }
    try {
      parse_matrix("labels: a,a ; x,y\n01\n10\n");
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::label_mismatch);
    }
  }

  TEST_CASE("patterns allow stars, matrices keep them out of labels") {
    Pattern p = parse_pattern("# two-chain obstruction\n1*\n01\n");
    CHECK(p.rows() == 2);
    CHECK(p.at(0, 0) == PatternCell::one);
    CHECK(p.at(0, 1) == PatternCell::star);
    CHECK(p.at(1, 0) == PatternCell::zero);
    CHECK(p.at(1, 1) == PatternCell::one);
  }

  TEST_CASE("format round trip") {
    BinaryMatrix m = parse_matrix("labels: a,b ; x,y\n01\n11\n");
    BinaryMatrix again = parse_matrix(format_matrix(m, true));
    CHECK(m == again);
  }
}

TEST_SUITE("permutation") {
  TEST_CASE("identity and inverse") {
    Permutation p({2, 0, 1});
    Permutation inv = p.inverse();
    CHECK(compose(p, inv) == Permutation::identity(3));
    CHECK(compose(inv, p) == Permutation::identity(3));
  }

  TEST_CASE("rejects repeats and range errors") {
    CHECK_THROWS_AS(Permutation({0, 0}), error);
    CHECK_THROWS_AS(Permutation({1, 2}), error);
  }

  TEST_CASE("composition matches sequential permute") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      BinaryMatrix m(5, 4);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if (rng() & 1) m.set(i, j, true);
      auto random_perm = [&](std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), std::size_t{0});
        std::shuffle(v.begin(), v.end(), rng);
        return Permutation(v);
      };
      Permutation r1 = random_perm(5), r2 = random_perm(5);
      Permutation c1 = random_perm(4), c2 = random_perm(4);
      CHECK(permute(permute(m, r1, c1), r2, c2) ==
            permute(m, compose(r1, r2), compose(c1, c2)));
    }
  }
}

TEST_SUITE("matches_at") {
  TEST_CASE("full-size occurrence") {
    BinaryMatrix m = mk({"010", "101", "010"});
    Occurrence occ{{0, 1, 2}, {0, 1, 2}};
    CHECK(matches_at(m, gamma_pattern(), occ));
  }

  TEST_CASE("star cells are unconstrained") {
    BinaryMatrix m = mk({"11", "01"});
    CHECK(matches_at(m, pat({"1*", "01"}), Occurrence{{0, 1}, {0, 1}}));
    CHECK_FALSE(matches_at(m, pat({"10", "01"}), Occurrence{{0, 1}, {0, 1}}));
  }

  TEST_CASE("malformed occurrences raise") {
    BinaryMatrix m = mk({"010", "101", "010"});
    auto expect_oob = [&](const Occurrence& occ) {
      try {
        matches_at(m, gamma_pattern(), occ);
        FAIL("expected error");
      } catch (const error& e) {
        CHECK(e.code() == errc::index_out_of_bounds);
      }
    };
    expect_oob(Occurrence{{0, 1}, {0, 1, 2}});        // wrong arity
    expect_oob(Occurrence{{0, 1, 5}, {0, 1, 2}});     // out of range
    expect_oob(Occurrence{{0, 2, 1}, {0, 1, 2}});     // not increasing
    expect_oob(Occurrence{{0, 1, 1}, {0, 1, 2}});     // repeated
  }
}

TEST_SUITE("find_pattern") {
  TEST_CASE("frozen gamma occurrence") {
    BinaryMatrix m = mk({"010", "101", "010"});
    auto occ = find_pattern(m, gamma_pattern());
    REQUIRE(occ.has_value());
    CHECK(occ->row_indices == std::vector<std::size_t>{0, 1, 2});
    CHECK(occ->col_indices == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("complement of the identity avoids gamma and delta") {
    BinaryMatrix m = mk({"011", "101", "110"});
    CHECK_FALSE(find_pattern(m, gamma_pattern()).has_value());
    CHECK_FALSE(find_pattern(m, delta_pattern()).has_value());
    CHECK(is_free(m, {gamma_pattern(), delta_pattern()}));
  }

  TEST_CASE("single-row pattern picks lexicographically least row") {
    BinaryMatrix m = mk({"10", "01"});
    auto occ = find_pattern(m, pat({"01"}));
    REQUIRE(occ.has_value());
    CHECK(occ->row_indices == std::vector<std::size_t>{1});
    CHECK(occ->col_indices == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("leftmost columns win within the first matching rows") {
    BinaryMatrix m = mk({"101", "101"});
    auto occ = find_pattern(m, pat({"101"}));
    REQUIRE(occ.has_value());
    CHECK(occ->row_indices == std::vector<std::size_t>{0});
    CHECK(occ->col_indices == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("oversized patterns never embed") {
    BinaryMatrix m = mk({"1"});
    CHECK_FALSE(find_pattern(m, pat({"11"})).has_value());
    CHECK_FALSE(find_pattern(m, pat({"1", "1"})).has_value());
  }

  TEST_CASE("agrees with subset enumeration on random instances") {
    std::mt19937_64 rng(101);
    const auto& catalog = pattern_catalog();
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
      std::size_t rows = 1 + rng() % 6;
      std::size_t cols = 1 + rng() % 6;
      double density = 0.2 + 0.15 * static_cast<double>(rng() % 5);
      BinaryMatrix m(rows, cols);
      std::bernoulli_distribution coin(density);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (coin(rng)) m.set(i, j, true);
      const Pattern& p = catalog[trial % catalog.size()].pattern;
      auto fast = find_pattern(m, p);
      auto naive = find_pattern_naive(m, p);
      REQUIRE(fast.has_value() == naive.has_value());
      if (fast) {
        CHECK(fast->row_indices == naive->row_indices);
        CHECK(fast->col_indices == naive->col_indices);
        CHECK(matches_at(m, p, *fast));
        ++checked;
      }
      CHECK(contains_pattern(m, p) == fast.has_value());
    }
    CHECK(checked > 50);  // the sample exercises both outcomes
  }

  TEST_CASE("existence kernels agree beyond one word of columns") {
    // Rows of growing prefixes: free of the catalog obstructions that need a
    // zero left of a one, with columns spanning three words.
    std::size_t rows = 40, cols = 150;
    BinaryMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j <= (i * cols) / rows && j < cols; ++j)
        m.set(i, j, true);
    for (const NamedPattern& entry : pattern_catalog()) {
      CHECK(contains_pattern(m, entry.pattern) ==
            find_pattern(m, entry.pattern).has_value());
    }
  }
}

TEST_SUITE("matrix algebra") {
  TEST_CASE("hadamard") {
    BinaryMatrix a = mk({"11", "01"});
    BinaryMatrix b = mk({"10", "11"});
    CHECK(hadamard(a, b) == mk({"10", "01"}));
    BinaryMatrix wrong(2, 3);
    CHECK_THROWS_AS(hadamard(a, wrong), error);
    BinaryMatrix relabeled = mk({"10", "11"});
    relabeled.set_labels({"p", "q"}, {"v1", "v2"});
    try {
      hadamard(a, relabeled);
      FAIL("expected error");
    } catch (const error& e) {
      CHECK(e.code() == errc::label_mismatch);
    }
  }

  TEST_CASE("permute moves labels with entries") {
    BinaryMatrix m = parse_matrix("labels: a,b ; x,y\n01\n10\n");
    BinaryMatrix swapped = permute(m, Permutation({1, 0}), Permutation::identity(2));
    CHECK(swapped.row_labels() == std::vector<std::string>{"b", "a"});
    CHECK(swapped.get(0, 0));
    CHECK_FALSE(swapped.get(0, 1));
    CHECK_THROWS_AS(permute(m, Permutation::identity(3), Permutation::identity(2)),
                    error);
  }

  TEST_CASE("leq") {
    CHECK(leq(mk({"010"}), mk({"011"})));
    CHECK_FALSE(leq(mk({"100"}), mk({"011"})));
    CHECK_THROWS_AS(leq(mk({"10"}), mk({"100"})), error);
  }
}
