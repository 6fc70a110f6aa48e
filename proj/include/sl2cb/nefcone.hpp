#pragma once

// Face-of-the-nef-cone certificates: intersection matrices of distinguished
// F-curve families, exact integer rank computation, and the vanishing-locus
// rank argument that pins a divisor class to an extremal ray.

#include "sl2cb/divisors.hpp"
#include "sl2cb/fusion.hpp"
#include "sl2cb/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sl2cb {

// Distinguished F-curve families, named by the repeated small cells:
//   f11       F_{1,1,i},    1 <= i <= g
//   f22       F_{2,2,i},    1 <= i <= g-1
//   f33_mixed F_{3,3,2i+1}, 0 <= i <= ceil(g/2)-2,
//             together with F_{1,1,2i+1}, 0 <= i <= ceil(g/2)-1
// where g = floor((n-2)/2).
enum class CurveFamily { f11, f22, f33_mixed };

std::vector<FCurve> family_curves(CurveFamily family, int n);

// Rank the family spans in the boundary basis: g for f11 and g-1 for f22 at
// every n >= 6.  f33_mixed spans 2k-1 (its size) when g = 2k; for odd g the
// family picks up one relation at even n and at n = 9, leaving rank 2k-2
// (equal to g-1, which is what the extremal-ray argument consumes).
int family_expected_rank(CurveFamily family, int n);

// Fraction-free integer rank (Bareiss elimination); exact.
long integer_matrix_rank(MatrixZ m);

// Rank of a rational matrix by clearing row denominators, then Bareiss.
long rational_matrix_rank(const MatrixQ& m);

// Rows = curves, columns = B_2..B_{floor(n/2)}.
MatrixZ family_intersection_matrix(const std::vector<FCurve>& curves);

long family_rank(CurveFamily family, int n);

// Rows = spine curves F_{1,1,i} for i = 1..g, columns = levels 1..g; entry
// (i, ell) is the degree of the level-ell all-ones divisor on F_{1,1,i}.
// Lower triangular with nonzero diagonal, so the classes form a basis.
MatrixZ cb_basis_matrix(int n, RankCache& cache);

// Nef-face certificate for one level: every F-curve degree (computed through
// the weight-sum expansion and cross-checked against the class pairing), the
// vanishing curves, and the rank they span.  The class generates an extremal
// ray of the symmetric nef cone when all degrees are nonnegative and the
// vanishing curves span a hyperplane of the curve space.
struct NefFaceReport {
  int n;
  int level;
  SymDivisor divisor;
  std::vector<FCurve> curves;
  std::vector<Integer> degrees;
  bool all_nonnegative;
  std::vector<int> vanishing;
  long span_rank;
  bool certifies_extremal_ray;
};

NefFaceReport nef_face_report(Level ell, int n, RankCache& cache);

// Feasibility of writing the class as c * (K + sum b_i B_i) with 0 <= b_i <= 1
// and c > 0.  With u = 1/c each boundary index imposes kappa_i <= d_i u <=
// kappa_i + 1 for kappa_i = i(n-i)/(n-1) - 2, so feasibility is an interval
// intersection.  The witness takes the largest feasible u (every b_i as large
// as possible); infeasibility is reported as the lexicographically smallest
// pair of indices whose intervals miss each other.
struct LogCanonicalReport {
  int n;
  int level;
  SymDivisor divisor;
  bool feasible;
  // Feasible: c ranges over [c_low, c_high] (no c_high when unbounded).
  Rational c_low;
  std::optional<Rational> c_high;
  Rational witness_c;
  std::vector<Rational> witness_b;  // indexed by B_2..B_{n/2}
  // Infeasible: indices (i, j) with L_i > U_j.
  std::optional<std::pair<int, int>> blocking;
};

LogCanonicalReport log_canonical_report(Level ell, int n, RankCache& cache);

}  // namespace sl2cb
