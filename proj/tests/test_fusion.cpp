#include "sl2cb/fusion.hpp"
#include "sl2cb/verlinde.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"

using namespace sl2cb;
using sl2cb::testing::oracle_rank;
using sl2cb::testing::oracle_rank_infinity;

namespace {

std::vector<int> ones_with_tail(int j, int t) {
  std::vector<int> w(j, 1);
  w.push_back(t);
  return w;
}

// All weight tuples (not just canonical ones) with n entries in 0..ell.
template <typename F>
void for_each_tuple(int n, int ell, F&& fn) {
  std::vector<int> w(n, 0);
  while (true) {
    fn(w);
    int i = n - 1;
    while (i >= 0 && w[i] == ell) {
      w[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++w[i];
  }
}

}  // namespace

TEST_CASE("oracle fixed points") {
  // The oracle is itself pinned to frozen values before anything trusts it.
  CHECK(oracle_rank(1, {1, 1, 1, 1}) == 1);
  CHECK(oracle_rank(1, {1, 1}) == 1);
  CHECK(oracle_rank(1, {1, 1, 1}) == 0);
  CHECK(oracle_rank(2, {1, 1, 1, 1}) == 2);
  CHECK(oracle_rank(2, {2, 2, 2, 2, 2}) == 0);
  CHECK(oracle_rank(3, ones_with_tail(15, 3)) == 377);
  // r_2(1^{2k+2}) = 2^k
  for (int k = 0; k <= 8; ++k) {
    CHECK(oracle_rank(2, std::vector<int>(2 * k + 2, 1)) == Integer(1) << k);
  }

  // Stable-range table: frozen rows 8 and 15, Catalan numbers down column 0.
  const long row8[] = {14, 0, 28, 0, 20, 0, 7, 0, 1};
  for (long t = 0; t <= 8; ++t) CHECK(oracle_rank_infinity(8, t) == row8[t]);
  const long row15[] = {0, 1430, 0, 2002, 0, 1638, 0, 910, 0, 350, 0, 90, 0, 14, 0, 1};
  for (long t = 0; t <= 15; ++t) CHECK(oracle_rank_infinity(15, t) == row15[t]);
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (long x = 0; x <= 7; ++x) CHECK(oracle_rank_infinity(2 * x, 0) == catalan[x]);
}

TEST_CASE("weight vector canonical form and propagation") {
  const auto w = WeightVector::canonical({0, 3, 1, 2, 1});
  CHECK(w.get() == std::vector<int>{3, 2, 1, 1, 0});
  CHECK(w.sum() == 7);
  CHECK(w.max() == 3);
  CHECK(w.without_zeros().get() == std::vector<int>{3, 2, 1, 1});
  CHECK_THROWS_AS(WeightVector::canonical({1, -1}), precondition_error);
  CHECK_THROWS_AS(Level(0), precondition_error);

  RankCache cache;
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 50; ++trial) {
    const int ell = 1 + int(rng() % 5);
    const int n = 2 + int(rng() % 7);
    std::vector<int> v(n);
    for (int& x : v) x = int(rng() % (ell + 1));
    const Integer base = rank(Level(ell), WeightVector::canonical(v), cache);
    v.push_back(0);
    CHECK(rank(Level(ell), WeightVector::canonical(v), cache) == base);
  }
}

TEST_CASE("small-n fusion rules") {
  RankCache cache;
  CHECK(fusion_rank_small(Level(3), WeightVector::canonical({})) == 1);
  CHECK(fusion_rank_small(Level(3), WeightVector::canonical({2})) == 0);
  for (int ell = 1; ell <= 4; ++ell) {
    for (int a = 0; a <= ell; ++a) {
      for (int b = 0; b <= ell; ++b) {
        CHECK(fusion_rank_small(Level(ell), WeightVector::canonical({a, b})) ==
              (a == b ? 1 : 0));
        for (int c = 0; c <= ell; ++c) {
          const Integer got = fusion_rank_3pt(Level(ell), a, b, c);
          CHECK(got == oracle_rank(ell, {a, b, c}));
        }
      }
    }
  }
  CHECK_THROWS_AS(fusion_rank_small(Level(2), WeightVector::canonical({1, 1, 1, 1})),
                  precondition_error);
  CHECK_THROWS_AS(rank(Level(2), WeightVector::canonical({3, 1}), cache),
                  precondition_error);
}

TEST_CASE("memoized rank matches the path-count oracle exhaustively") {
  RankCache cache;
  for (int ell = 1; ell <= 3; ++ell) {
    for (int n = 0; n <= 6; ++n) {
      for_each_tuple(n, ell, [&](const std::vector<int>& w) {
        const Integer expect = oracle_rank(ell, w);
        CHECK(rank(Level(ell), WeightVector::canonical(w), cache) == expect);
      });
    }
  }
}

TEST_CASE("rank examples") {
  RankCache cache;
  CHECK(rank(Level(3), WeightVector::canonical(ones_with_tail(15, 3)), cache) == 377);
  // Diagonal seeds r_ell(k, k) = 1 for k <= ell.
  for (int ell = 1; ell <= 6; ++ell) {
    for (int k = 0; k <= ell; ++k) {
      CHECK(rank_1t(Level(ell), k, k, cache) == 1);
    }
    // One column past the level: r_ell(ell+2, ell) = ell.
    CHECK(rank_1t(Level(ell), ell + 2, ell, cache) == ell);
  }
  for (int k = 0; k <= 8; ++k) {
    CHECK(rank_1t(Level(2), 2 * k + 1, 1, cache) == Integer(1) << k);
  }
}

TEST_CASE("all rank algorithms agree on the (1^j, t) grid") {
  RankCache cache;
  for (int ell = 1; ell <= 4; ++ell) {
    for (long j = 0; j <= 16; ++j) {
      for (long t = 0; t <= ell; ++t) {
        const Integer table = rank_1t(Level(ell), j, t, cache);
        CHECK(table == rank_closed_form(Level(ell), j, t));
        CHECK(table == rank_by_reflection(Level(ell), j, t));
        CHECK(table == rank(Level(ell), WeightVector::canonical(ones_with_tail(j, t)),
                            cache));
        if ((j + t) % 2 == 0 && j <= 12) {
          CHECK(table == verlinde_rank_numeric(
                             Level(ell), WeightVector::canonical(ones_with_tail(j, t))));
        }
      }
    }
  }
}

TEST_CASE("reflection decomposition of r_3(15,3)") {
  const auto terms = reflection_terms(Level(3), 15, 3);
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].t == 3);
  CHECK(terms[0].sign == 1);
  CHECK(terms[0].value == 2002);
  CHECK(terms[1].t == 5);
  CHECK(terms[1].sign == -1);
  CHECK(terms[1].value == 1638);
  CHECK(terms[2].t == 13);
  CHECK(terms[2].sign == 1);
  CHECK(terms[2].value == 14);
  CHECK(terms[3].t == 15);
  CHECK(terms[3].sign == -1);
  CHECK(terms[3].value == 1);
  CHECK(rank_by_reflection(Level(3), 15, 3) == 377);
}

TEST_CASE("stable-range ranks match the recurrence oracle") {
  for (long j = 0; j <= 20; ++j) {
    for (long t = 0; t <= j + 1; ++t) {
      CHECK(rank_infinity(j, t) == oracle_rank_infinity(j, t));
    }
  }
  CHECK(rank_infinity(15, 3) == 2002);
  CHECK(rank_infinity(15, 5) == 1638);
  CHECK(rank_infinity(8, 0) == 14);
}

TEST_CASE("numeric verlinde evaluator") {
  RankCache cache;
  CHECK(verlinde_rank_numeric(Level(3), WeightVector::canonical(ones_with_tail(15, 3))) ==
        377);
  CHECK(verlinde_rank_numeric(Level(1), WeightVector::canonical({1, 1, 1, 1})) == 1);
  CHECK(verlinde_rank_numeric(Level(2), WeightVector::canonical(std::vector<int>(8, 1))) ==
        rank(Level(2), WeightVector::canonical(std::vector<int>(8, 1)), cache));
  for (int ell = 1; ell <= 3; ++ell) {
    CHECK(verlinde_rank_numeric(Level(ell), WeightVector::canonical({ell, ell})) == 1);
  }
  // Genus parameter: one-point genus-one bundle with the vacuum weight has
  // rank ell+1 (the number of level-ell weights).
  for (int ell = 1; ell <= 4; ++ell) {
    CHECK(verlinde_rank_numeric(Level(ell), WeightVector::canonical({0}), 1) == ell + 1);
  }
}

TEST_CASE("vanishing rules and the nonvanishing criterion") {
  RankCache cache;
  CHECK(odd_sum_vanishes(WeightVector::canonical({1, 1, 1})));
  CHECK_FALSE(odd_sum_vanishes(WeightVector::canonical({1, 1})));
  CHECK(triangle_vanishes(WeightVector::canonical({3, 1, 1})));

  CHECK(nonvanishing_criterion(Level(1), WeightVector::canonical({1, 1, 1, 1})));
  CHECK_FALSE(nonvanishing_criterion(Level(2), WeightVector::canonical({2, 1, 1, 1})));
  CHECK(nonvanishing_criterion(Level(2), WeightVector::canonical({2, 2, 2, 2, 1, 1})) ==
        (rank(Level(2), WeightVector::canonical({2, 2, 2, 2, 1, 1}), cache) > 0));

  for (int ell = 1; ell <= 3; ++ell) {
    for (int n = 0; n <= 7; ++n) {
      for_each_tuple(n, ell, [&](const std::vector<int>& w) {
        const auto wv = WeightVector::canonical(w);
        CHECK(nonvanishing_criterion(Level(ell), wv) ==
              (rank(Level(ell), wv, cache) > 0));
      });
    }
  }
}

TEST_CASE("factorization identity and permutation invariance on random inputs") {
  RankCache cache;
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 40; ++trial) {
    const int ell = 1 + int(rng() % 5);
    const int n = 4 + int(rng() % 7);
    std::vector<int> v(n);
    for (int& x : v) x = int(rng() % (ell + 1));
    const Integer whole = rank(Level(ell), WeightVector::canonical(v), cache);

    std::shuffle(v.begin(), v.end(), rng);
    CHECK(rank(Level(ell), WeightVector::canonical(v), cache) == whole);

    const int cut = 2 + int(rng() % (n - 3));
    Integer split_sum = 0;
    for (int alpha = 0; alpha <= ell; ++alpha) {
      std::vector<int> left(v.begin(), v.begin() + cut);
      std::vector<int> right(v.begin() + cut, v.end());
      left.push_back(alpha);
      right.push_back(alpha);
      split_sum += rank(Level(ell), WeightVector::canonical(left), cache) *
                   rank(Level(ell), WeightVector::canonical(right), cache);
    }
    CHECK(split_sum == whole);
  }
}

TEST_CASE("rank cache export and import round-trip") {
  RankCache cache;
  rank(Level(3), WeightVector::canonical(ones_with_tail(9, 3)), cache);
  const auto entries = cache.export_entries();
  REQUIRE(!entries.empty());
  RankCache fresh;
  for (const auto& [key, value] : entries) {
    fresh.import_entry(key.first, key.second, value);
  }
  CHECK(fresh.lookup(3, WeightVector::canonical(ones_with_tail(9, 3))).has_value());
  CHECK(fresh.export_entries().size() == entries.size());
}
