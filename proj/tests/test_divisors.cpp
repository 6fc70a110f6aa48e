#include "sl2cb/divisors.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

namespace sl2cb {
namespace {

// Index folding for the c-identity below: c_0 = c_1 = 0, c_s = c_{n-s} past
// the midpoint.
Rational folded(const std::vector<Rational>& c, int s, int n) {
  if (s > n / 2) s = n - s;
  if (s < 2) return 0;
  return c[s - 2];
}

TEST_CASE("F-curve enumeration and boundary intersection numbers") {
  CHECK(all_fcurves(6).size() == 2);
  CHECK(all_fcurves(8).size() == 5);
  CHECK(all_fcurves(9).size() == 6);
  for (int n = 5; n <= 12; ++n) {
    for (const FCurve& f : all_fcurves(n)) {
      int total = 0;
      for (int p : f.parts()) total += p;
      CHECK(total == n);
    }
  }

  // Spine curves with three unit cells meet only B_2 and B_3.
  for (int n = 6; n <= 14; ++n) {
    const FCurve f = FCurve::spine(n, 1);
    CHECK(intersect_BF(2, f) == 3);
    CHECK(intersect_BF(3, f) == -1);
    for (int j = 4; j <= n / 2; ++j) CHECK(intersect_BF(j, f) == 0);
  }

  // Two 2-cells push the pair sums to 3 and 4 and subtract twice at B_2.
  {
    const FCurve f = FCurve::of({2, 2, 1, 7});
    REQUIRE(f.n() == 12);
    CHECK(intersect_BF(2, f) == -2);
    CHECK(intersect_BF(3, f) == 2);
    CHECK(intersect_BF(4, f) == 1);
    CHECK(intersect_BF(5, f) == -1);
    CHECK(intersect_BF(6, f) == 0);
  }

  // Folding can merge a pairing and a cell contribution.
  {
    const FCurve f = FCurve::of({3, 3, 1, 1});  // n = 8
    CHECK(intersect_BF(2, f) == 1);
    CHECK(intersect_BF(3, f) == -2);
    CHECK(intersect_BF(4, f) == 2);
  }

  std::ostringstream os;
  os << FCurve::spine(8, 2);
  CHECK(os.str() == "F_{4,2,1,1}");
}

TEST_CASE("psi and canonical classes") {
  const SymDivisor psi4 = psi_class(4);
  CHECK(psi4.coeff(2) == Rational(4, 3));

  const SymDivisor k6 = canonical_class(6);
  CHECK(k6.coeff(2) == Rational(-2, 5));
  CHECK(k6.coeff(3) == Rational(-1, 5));

  CHECK(intersect(psi_class(12), FCurve::of({2, 2, 1, 7})) == 1);
  CHECK(intersect(psi_class(12), FCurve::of({3, 3, 1, 5})) == 1);
  // On spine curves psi has degree 3 at the ends and 2 in the middle.
  for (int n = 6; n <= 13; ++n) {
    const SymDivisor psi = psi_class(n);
    for (int i = 1; i <= n - 3; ++i) {
      const Rational expected = (i == 1 || i == n - 3) ? 3 : 2;
      CHECK(intersect(psi, FCurve::spine(n, i)) == expected);
    }
  }
}

TEST_CASE("spine-curve rows satisfy the four-term contraction identity") {
  std::mt19937 gen(20260823);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int n = 6; n <= 13; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> c(SymDivisor::basis_size(n));
      SymDivisor d(n);
      for (int j = 2; j <= n / 2; ++j) {
        c[j - 2] = Rational(num(gen), 1 + trial);
        d.coeff(j) = c[j - 2];
      }
      for (int i = 1; i <= n - 3; ++i) {
        const Rational rhs = -folded(c, i + 2, n) - folded(c, i, n) +
                             folded(c, 2, n) + 2 * folded(c, i + 1, n);
        CHECK(intersect(d, FCurve::spine(n, i)) == rhs);
      }
    }
  }
}

TEST_CASE("four-point degrees") {
  CHECK(degree_4pt(Level(1), {1, 1, 1, 1}) == 1);
  CHECK(degree_4pt(Level(2), {2, 2, 2, 2}) == 2);
  CHECK(degree_4pt(Level(2), {2, 2, 1, 1}) == 1);
  CHECK(degree_4pt(Level(3), {2, 2, 2, 2}) == 2);

  // With two unit weights the degree is the indicator of (ell, ell, 1, 1).
  for (int ell = 1; ell <= 6; ++ell) {
    for (int a = 0; a <= ell; ++a) {
      for (int b = 0; b <= a; ++b) {
        const Integer expected = (a == ell && b == ell) ? 1 : 0;
        CHECK(degree_4pt(Level(ell), {a, b, 1, 1}) == expected);
      }
    }
  }

  // Permutation invariance and nonnegativity across the full level-3 range.
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        for (int d = 0; d <= 3; ++d) {
          const Integer v = degree_4pt(Level(3), {a, b, c, d});
          CHECK(v >= 0);
          CHECK(v == degree_4pt(Level(3), {d, b, a, c}));
        }
      }
    }
  }

  CHECK_THROWS_AS(degree_4pt(Level(2), {3, 0, 0, 0}), precondition_error);
}

TEST_CASE("curve intersections of the all-ones divisor") {
  RankCache cache;
  CHECK(intersect_cb_fcurve(Level(2), FCurve::spine(16, 2), cache) == 32);

  // Odd n carries no divisor.
  CHECK(intersect_cb_fcurve(Level(2), FCurve::of({4, 3, 1, 1}), cache) == 0);

  // Spine-curve values factor through the two long legs at top weight.
  for (int ell = 1; ell <= 4; ++ell) {
    for (int n = 8; n <= 12; n += 2) {
      for (int i = 1; i <= n - 3; ++i) {
        const Integer lhs = intersect_cb_fcurve(Level(ell), FCurve::spine(n, i), cache);
        const Integer rhs =
            rank_1t(Level(ell), i, ell, cache) * rank_1t(Level(ell), n - i - 2, ell, cache);
        CHECK(lhs == rhs);
        if (i < ell || (i - ell) % 2 != 0) CHECK(lhs == 0);
      }
    }
  }
}

TEST_CASE("divisor class via the reduced formula") {
  RankCache cache;
  const SymDivisor d16 = cb_divisor_class(Level(1), 6, cache);
  CHECK(d16.coeff(2) == Rational(2, 5));
  CHECK(d16.coeff(3) == Rational(1, 5));

  // Levels past the slope bound give the zero class.
  CHECK(cb_divisor_class(Level(4), 8, cache).is_zero());
  CHECK(cb_divisor_class(Level(7), 12, cache).is_zero());

  // The class and the weight-sum expansion give the same curve degrees.
  for (int ell = 1; ell <= 3; ++ell) {
    for (int n = 6; n <= 12; n += 2) {
      const SymDivisor d = cb_divisor_class(Level(ell), n, cache);
      for (const FCurve& f : all_fcurves(n)) {
        CHECK(intersect(d, f) == Rational(intersect_cb_fcurve(Level(ell), f, cache)));
      }
    }
  }
}

TEST_CASE("closed-form classes match the computed classes") {
  RankCache cache;
  const auto check_tag = [&](ClassTag tag, int n) {
    const int g = n / 2 - 1;
    const int ell = class_tag_level(tag, g);
    CAPTURE(class_tag_name(tag));
    CAPTURE(n);
    const SymDivisor closed = closed_form_class(tag, n);
    const SymDivisor computed = cb_divisor_class(Level(ell), n, cache);
    CHECK(closed == computed);
  };

  for (int n = 6; n <= 14; n += 2) check_tag(ClassTag::level1, n);
  for (int n = 6; n <= 14; n += 2) check_tag(ClassTag::level2, n);
  for (int n = 8; n <= 14; n += 2) check_tag(ClassTag::level3, n);
  for (int n = 10; n <= 14; n += 2) check_tag(ClassTag::level4, n);
  for (int n = 8; n <= 14; n += 2) check_tag(ClassTag::g_minus_2, n);
  for (int n = 6; n <= 14; n += 2) check_tag(ClassTag::g_minus_1, n);
  for (int n = 6; n <= 14; n += 2) check_tag(ClassTag::g_top, n);

  // Distinct tags naming the same level must agree where they overlap.
  CHECK(closed_form_class(ClassTag::g_minus_2, 8) == closed_form_class(ClassTag::level1, 8));
  CHECK(closed_form_class(ClassTag::g_minus_1, 8) == closed_form_class(ClassTag::level2, 8));
  CHECK(closed_form_class(ClassTag::g_top, 8) == closed_form_class(ClassTag::level3, 8));

  CHECK_THROWS_AS(closed_form_class(ClassTag::level4, 8), precondition_error);
}

TEST_CASE("proportionality of parallel classes") {
  RankCache cache;
  const SymDivisor d = cb_divisor_class(Level(2), 10, cache);
  SymDivisor scaled = d;
  scaled *= Rational(7, 3);
  const auto ratio = proportionality_ratio(scaled, d);
  REQUIRE(ratio.has_value());
  CHECK(*ratio == Rational(7, 3));

  const SymDivisor other = cb_divisor_class(Level(1), 10, cache);
  CHECK(!proportionality_ratio(d, other).has_value());
  SymDivisor zero(10);
  CHECK(!proportionality_ratio(d, zero).has_value());
}

TEST_CASE("class tags parse and print") {
  CHECK(parse_class_tag("g-2") == ClassTag::g_minus_2);
  CHECK(parse_class_tag("3") == ClassTag::level3);
  CHECK(!parse_class_tag("g+1").has_value());
  CHECK(class_tag_name(ClassTag::g_top) == "g");
  CHECK(class_tag_level(ClassTag::g_minus_1, 5) == 4);
}

}  // namespace
}  // namespace sl2cb
