#pragma once

// Exact divisor calculus on the moduli of stable n-pointed genus-zero curves
// modulo the symmetric group.  Symmetric divisor classes are stored in the
// boundary basis B_2..B_{floor(n/2)} (B_j = sum of boundary divisors whose
// marked-point split has min(|J|, n-|J|) = j; the complementary subset names
// the same divisor, folded once).  F-curves are indexed by 4-part partitions
// of n.

#include "sl2cb/fusion.hpp"
#include "sl2cb/numeric.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

namespace sl2cb {

// Symmetric divisor class: exact rational coefficients on B_2..B_{floor(n/2)}.
class SymDivisor {
 public:
  explicit SymDivisor(int n) : n_(n), c_(VectorQ::Zero(basis_size(n))) {
    require(n >= 4, "SymDivisor: n >= 4");
  }

  static int basis_size(int n) { return n / 2 - 1; }

  int n() const { return n_; }
  int max_index() const { return n_ / 2; }

  const Rational& coeff(int j) const {
    require(2 <= j && j <= max_index(), "SymDivisor: 2 <= j <= n/2");
    return c_[j - 2];
  }
  Rational& coeff(int j) {
    require(2 <= j && j <= max_index(), "SymDivisor: 2 <= j <= n/2");
    return c_[j - 2];
  }
  const VectorQ& coeffs() const { return c_; }

  bool is_zero() const;

  SymDivisor& operator+=(const SymDivisor& other);
  SymDivisor& operator*=(const Rational& s);
  friend SymDivisor operator+(SymDivisor a, const SymDivisor& b) { return a += b; }
  friend SymDivisor operator*(const Rational& s, SymDivisor d) { return d *= s; }
  friend bool operator==(const SymDivisor& a, const SymDivisor& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  int n_;
  VectorQ c_;
};

std::ostream& operator<<(std::ostream& os, const SymDivisor& d);

// F-curve: a 4-part partition a+b+c+d = n with all parts >= 1, stored weakly
// decreasing.
class FCurve {
 public:
  static FCurve of(std::array<int, 4> parts);
  // The curve F_{1,1,i} (fourth part n-i-2 implicit).
  static FCurve spine(int n, int i);

  int n() const { return n_; }
  const std::array<int, 4>& parts() const { return parts_; }

  friend bool operator==(const FCurve& a, const FCurve& b) {
    return a.parts_ == b.parts_;
  }

 private:
  int n_ = 0;
  std::array<int, 4> parts_{};
};

std::ostream& operator<<(std::ostream& os, const FCurve& f);

// All 4-part partitions of n, lexicographically decreasing.
std::vector<FCurve> all_fcurves(int n);

// B_j . F: among the three pairings of the four cells, count those whose
// folded pair-sum equals j; subtract the number of cells of size >= 2 whose
// folded size equals j.
Integer intersect_BF(int j, const FCurve& f);

// Row of all B_j . F for j = 2..floor(n/2).
RowVectorZ intersection_row(const FCurve& f);

// D . F by linearity over the basis.
Rational intersect(const SymDivisor& d, const FCurve& f);

// Total psi class: coefficient i(n-i)/(n-1) on B_i.
SymDivisor psi_class(int n);
// Canonical class: psi - 2 * (sum of all B_i).
SymDivisor canonical_class(int n);

// Degree on the 4-pointed moduli line of the level-ell bundle with weights mu,
// by the Casimir/fusion formula; exact, result asserted integral.
Integer degree_4pt(Level ell, const std::array<int, 4>& mu);

// Intersection of the level-ell all-ones divisor with an F-curve: sum over
// weight assignments of the 4-point degree times the product of leg ranks.
// For odd n the divisor is trivial and every intersection is zero.
Integer intersect_cb_fcurve(Level ell, const FCurve& f, RankCache& cache);

// Class of the level-ell all-ones divisor in the B basis:
//   coeff(B_i) = (1/(2(ell+2))) * [ (i(n-i)/(n-1)) * beta_1 - beta_i ],
//   beta_1 = (3/2) * r_ell(n),
//   beta_i = sum_t (t^2/2 + t) * r_ell(i,t) * r_ell(n-i,t).
// Levels >= g+1 give the zero class.
SymDivisor cb_divisor_class(Level ell, int n, RankCache& cache);

// Tags naming the levels that have dedicated closed-form class expressions.
enum class ClassTag { level1, level2, level3, level4, g_minus_2, g_minus_1, g_top };

// The level an applicable tag denotes at a given g.
int class_tag_level(ClassTag tag, int g);
std::optional<ClassTag> parse_class_tag(const std::string& text);
std::string class_tag_name(ClassTag tag);

// Closed-form class expressions (Fibonacci and power forms computed by exact
// integer recurrences).  Preconditions: n = 2(g+1) even and the tag's level
// lies in [1, g].
SymDivisor closed_form_class(ClassTag tag, int n);

// Fibonacci numbers F_0 = 0, F_1 = 1.
Integer fibonacci(long k);

// s with a == s * b, when the two classes are parallel and b is nonzero.
std::optional<Rational> proportionality_ratio(const SymDivisor& a, const SymDivisor& b);

}  // namespace sl2cb
