#pragma once

// Exact arithmetic scalars and shared numeric helpers.
//
// Integer and Rational are GMP-backed multiprecision types; both work as Eigen
// scalars (see <boost/multiprecision/eigen.hpp>).  All certificate-bearing
// computation in this library is exact; floating point appears only inside the
// pinned-precision numeric rank check (verlinde.hpp), which is a cross-check,
// never a source of certified values.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace sl2cb {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using MatrixZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVectorZ = Eigen::Matrix<Integer, 1, Eigen::Dynamic>;

// Violated input contract (maps to CLI exit code 3).  what() names the contract.
class precondition_error : public std::domain_error {
 public:
  explicit precondition_error(const std::string& contract)
      : std::domain_error(contract) {}
};

// An exactness guarantee failed: a value that must be an integer is not, or the
// numeric cross-check could not settle on an integer (CLI exit code 4).
class integrality_error : public std::runtime_error {
 public:
  explicit integrality_error(const std::string& what)
      : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& contract) {
  if (!ok) throw precondition_error(contract);
}

// C(n, k) with the extended convention: zero whenever k < 0 or k > n or n < 0.
Integer binomial(long n, long k);

// Exact quotient p/q as an Integer; throws integrality_error if q does not
// divide p.  context names the quantity being computed.
Integer exact_div(const Integer& p, const Integer& q, const std::string& context);

// Requires r to be an integer-valued rational; returns it as an Integer.
Integer require_integral(const Rational& r, const std::string& context);

// Canonical exact string: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Parses "p" or "p/q" (q > 0 after normalization); throws std::invalid_argument
// on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace sl2cb
