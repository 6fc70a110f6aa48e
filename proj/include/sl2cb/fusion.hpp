#pragma once

// Ranks of sl2 conformal-blocks bundles at level ell on the moduli of stable
// n-pointed genus-zero curves.
//
// Weights are dominant integral sl2 weights written as nonnegative integers
// (the coefficient on the fundamental weight); at level ell a weight lambda is
// admissible when 0 <= lambda <= ell.  Several independent rank algorithms are
// provided on purpose: the general memoized factorization recursion, a
// recurrence table for weight shapes (1^j, t), exact closed forms, a reflection
// expansion in level-infinity ranks, and (verlinde.hpp) a pinned-precision
// trigonometric evaluation.  Test and verification code cross-checks them
// against each other; none is allowed to silently stand in for another.

#include "sl2cb/numeric.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace sl2cb {

// Level of the affine sl2 algebra.  ell >= 1.
class Level {
 public:
  explicit Level(int ell) {
    require(ell >= 1, "Level: ell >= 1");
    value_ = ell;
  }
  int get() const { return value_; }

 private:
  int value_;
};

// Weight vector in canonical form: weakly decreasing, every entry >= 0.
// Admissibility against a level is checked where a level is supplied.
class WeightVector {
 public:
  WeightVector() = default;
  // Sorts into canonical order; rejects negative entries.
  static WeightVector canonical(std::vector<int> weights);

  const std::vector<int>& get() const { return w_; }
  std::size_t size() const { return w_.size(); }
  int sum() const;
  // Largest entry, 0 for the empty vector.
  int max() const;
  // Canonical form with all zero entries removed (propagation).
  WeightVector without_zeros() const;

  auto operator<=>(const WeightVector&) const = default;

 private:
  std::vector<int> w_;  // weakly decreasing
};

void require_admissible(Level ell, const WeightVector& weights);

// Key of the (1^j, t) rank table at a fixed level; level_infinity selects the
// stable-range table (no level truncation).  By convention the table value is
// zero for t < 0 and, at finite level, for t > ell.
struct RankTableKey {
  int level;  // >= 1, or RankTableKey::infinity
  long j;     // number of weight-1 entries, >= 0
  long t;     // the distinguished weight
  static constexpr int infinity = -1;
};

// Memo store for the factorization recursion and the (1^j, t) tables.
// Logically a value map: a key is either absent or holds the final value.  The
// implementation is confined to a single thread (the CLI and tests are
// single-threaded); no locking is performed.
class RankCache {
 public:
  std::optional<Integer> lookup(int level, const WeightVector& weights) const;
  void store(int level, const WeightVector& weights, const Integer& value);

  // Rank table rows for shape (1^j, t), grown on demand.
  const Integer& table(int level, long j, long t);

  // Snapshot of the general memo for serialization, sorted by key.
  std::vector<std::pair<std::pair<int, std::vector<int>>, Integer>> export_entries() const;
  void import_entry(int level, std::vector<int> weights, Integer value);

 private:
  std::map<std::pair<int, WeightVector>, Integer> memo_;
  // tables_[ell][j][t], row j built from row j-1.
  std::map<int, std::vector<std::vector<Integer>>> tables_;
};

// True iff the total weight is odd (forces rank zero).
bool odd_sum_vanishes(const WeightVector& weights);

// True iff the largest weight exceeds the sum of the others (forces rank zero
// for n >= 1 after zero-stripping).
bool triangle_vanishes(const WeightVector& weights);

// Rank for n <= 3 points by the vacuum, duality, and three-point fusion rules.
Integer fusion_rank_small(Level ell, const WeightVector& weights);

// Three-point fusion rank, 0 or 1: admissible triples have even total weight,
// satisfy the triangle inequalities, and total weight <= 2*ell.
Integer fusion_rank_3pt(Level ell, int a, int b, int c);

// General rank by memoized factorization.  Strips zero weights, applies the
// parity and triangle vanishing tests, then splits off the two largest weights
// against the rest and sums over the intermediate weight.
Integer rank(Level ell, const WeightVector& weights, RankCache& cache);

// Rank of shape (1^j, t) via the two-term recurrence
//   r(j, t) = r(j-1, t-1) + r(j-1, t+1),   r(0, t) = [t == 0],
// with r = 0 off the admissible band 0 <= t <= ell.
Integer rank_1t(Level ell, long j, long t, RankCache& cache);

// Level-infinity (stable range) rank of shape (1^j, t): the ballot number
//   (t+1)/(j+1) * C(j+1, (j-t)/2),
// zero for mismatched parity or t > j.  Computed exactly; integrality is
// asserted.
Integer rank_infinity(long j, long t);

// Closed form for the finite-level (1^j, t) rank, split by the parity of j.
// Evaluates an exact rational expression and asserts the result is a
// nonnegative integer; a failed assertion is a hard error, never a fallback.
Integer rank_closed_form(Level ell, long j, long t);

// Finite-level rank as an alternating sum of level-infinity ranks over the
// reflection orbit of t modulo 2(ell+2), truncated at K = ceil(j / (2(ell+2))).
Integer rank_by_reflection(Level ell, long j, long t);

// The reflection expansion's terms (for reporting): pairs of (t', sign) with
// the level-infinity rank taken at (j, t').
struct ReflectionTerm {
  long t;
  int sign;  // +1 or -1
  Integer value;
};
std::vector<ReflectionTerm> reflection_terms(Level ell, long j, long t);

// Nonvanishing test without computing the rank: even total weight and, for
// every cardinality m with n - m odd, 0 <= m <= n-1, the sum of the m smallest
// weights plus ell is at least the sum of the other n - m weights.  Runs in
// O(n log n).  Equivalent to rank > 0.
bool nonvanishing_criterion(Level ell, const WeightVector& weights);

}  // namespace sl2cb
