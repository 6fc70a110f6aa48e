#pragma once

// Pullbacks of divisors on moduli of positive-genus curves to the symmetric
// genus-zero space: the branched-double-cover map (n = 2g+2 marked points to
// genus g) and the flag map (attaching an elliptic tail at each of the n
// marked points, landing in genus n).  Includes the combinatorial F-divisor
// inequalities used to certify nefness upstairs.

#include "sl2cb/divisors.hpp"
#include "sl2cb/fusion.hpp"
#include "sl2cb/numeric.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace sl2cb {

// Divisor a*lambda - sum_{i=0}^{floor(genus/2)} b[i]*delta_i on the moduli of
// stable curves of the given genus (delta indices are folded, so b has
// floor(genus/2)+1 entries; the minus sign is part of the shape).
struct GDivisor {
  int genus;
  Rational a;
  std::vector<Rational> b;
};

GDivisor make_gdivisor(int genus, Rational a, std::vector<Rational> b);
// a = 1, all b = 0.
GDivisor lambda_divisor(int genus);

GDivisor operator*(const Rational& s, GDivisor d);
GDivisor operator+(GDivisor x, const GDivisor& y);

// Pullback along the double cover of a rational curve branched at n = 2g+2
// points:
//   coeff(B_k) = a k(n-k)/(8(n-1)) - 2 b_0            for even k,
//   coeff(B_k) = a (k-1)(n-k-1)/(8(n-1)) - b_{(k-1)/2}/2   for odd k,
// for k = 2..g+1.
SymDivisor h_pullback(const GDivisor& d);

// Pullback along the flag map (n elliptic tails), genus must equal n even:
//   coeff(B_j) = (j(n-j)/(n-1)) b_1 - b_j, j = 2..n/2.
// The lambda part pulls back to zero.
SymDivisor flag_pullback(const GDivisor& d);

// One violated instance of an F-divisor inequality: the condition number, the
// delta indices involved (unused slots -1), and the offending value.
struct FConditionWitness {
  int condition;
  std::array<int, 4> indices;
  Rational value;
};

// The five F-divisor inequalities on genus m = 2(g+1), delta indices folded
// through min(s, m-s) (a pair or quadruple block can fold onto delta_0):
//   (1) a - 12 b_0 + b_1 >= 0
//   (2) b_i >= 0
//   (3) 2 b_0 - b_i >= 0 for i >= 1
//   (4) b_i + b_j >= b_{fold(i+j)} for 1 <= i <= j <= m/2
//   (5) b_{f(i)}+b_{f(j)}+b_{f(k)}+b_{f(l)} >= b_{f(i+j)}+b_{f(i+k)}+b_{f(i+l)}
//       for i+j+k+l = m, all parts >= 1.
struct FDivisorReport {
  bool pass;
  std::array<bool, 5> condition_pass;
  std::vector<FConditionWitness> violations;  // first witness per failed condition
};

FDivisorReport f_divisor_check(const GDivisor& d);

// Nef divisor on genus 2(g+1) with trivial flag pullback and strictly
// positive degree on the curves behind conditions (1)-(4); used to repair
// condition (4) for the top two levels.  Coefficients: alpha*lambda - beta*
// delta_0 - sum i(2(g+1)-i) delta_i; requires alpha > 12*beta - (2g+1) and
// 2*beta > (g+1)^2.
GDivisor trivial_pullback_divisor(const Rational& alpha, const Rational& beta, int g);
// The smallest choices in the valid range: beta = ((g+1)^2+1)/2,
// alpha = 12*beta - 2g.
GDivisor trivial_pullback_divisor(int g);

// The displayed F-divisor candidate for a tag (levels 1, 2, g-1, g only).
GDivisor base_flag_divisor(ClassTag tag, const Rational& a, const Rational& b, int g);

// Scale making flag_pullback(scale * base_flag_divisor) the conformal-blocks
// class: 1/4, 3*2^{g-1}/8, g-1, 1/2 for tags 1, 2, g-1, g.
Rational flag_scale(ClassTag tag, int g);

// Smallest (a, b) the construction admits: per-tag lower bound for b and
// a = 12b - 1.
std::pair<Rational, Rational> default_flag_parameters(ClassTag tag, int g);

struct FlagProgramReport {
  ClassTag tag;
  int g;
  Rational a;
  Rational b;
  Rational scale;
  std::optional<Rational> d;  // given, or smallest found; empty if none works
  bool pullback_matches;      // f*(scale*base + d*aux) equals the CB class
  bool auxiliary_trivial;     // f*(aux) vanishes identically
  FDivisorReport conditions;  // at the reported d
  bool all_pass;
};

// Certifies the flag program for one tag: the pullback identity (exact) and
// the five F-divisor conditions.  When d is not supplied, searches
// d = 0, 1/2, 1, ... up to 10(g+1)^2 for the first value passing everything.
// Rejects parameters below the tag's floor (b >= default floor, a >= 12b - 1,
// d >= 0), naming the violated bound.
FlagProgramReport verify_flag_program(ClassTag tag, const Rational& a, const Rational& b,
                                      std::optional<Rational> d, int g, RankCache& cache);

}  // namespace sl2cb
