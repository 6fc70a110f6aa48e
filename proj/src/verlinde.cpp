#include "sl2cb/verlinde.hpp"

#include <mpfr.h>

namespace sl2cb {

namespace {

// One evaluation at fixed precision.  Returns true and sets out when the value
// is within tol of an integer.
bool try_eval(int ell, const std::vector<int>& lambda, int genus,
              mpfr_prec_t prec, Integer& out) {
  const int n = static_cast<int>(lambda.size());
  const long expo = 2L * genus + n - 2;
  mpfr_t pi, theta, s, term, factor, acc, rounded, diff;
  mpfr_inits2(prec, pi, theta, s, term, factor, acc, rounded, diff,
              static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_zero(acc, 1);
  for (int j = 0; j <= ell; ++j) {
    // theta = (j+1) pi / (ell+2)
    mpfr_mul_si(theta, pi, j + 1, MPFR_RNDN);
    mpfr_div_si(theta, theta, ell + 2, MPFR_RNDN);
    // term = prod_i sin((lambda_i+1) theta) / sin(theta)^expo
    mpfr_set_si(term, 1, MPFR_RNDN);
    for (int li : lambda) {
      mpfr_mul_si(factor, theta, li + 1, MPFR_RNDN);
      mpfr_sin(factor, factor, MPFR_RNDN);
      mpfr_mul(term, term, factor, MPFR_RNDN);
    }
    mpfr_sin(s, theta, MPFR_RNDN);
    mpfr_pow_si(s, s, expo, MPFR_RNDN);
    mpfr_div(term, term, s, MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  // acc *= ((ell+2)/2)^(genus-1)
  mpfr_set_si(factor, ell + 2, MPFR_RNDN);
  mpfr_div_si(factor, factor, 2, MPFR_RNDN);
  mpfr_pow_si(factor, factor, genus - 1, MPFR_RNDN);
  mpfr_mul(acc, acc, factor, MPFR_RNDN);

  mpfr_rint(rounded, acc, MPFR_RNDN);
  mpfr_sub(diff, acc, rounded, MPFR_RNDN);
  mpfr_abs(diff, diff, MPFR_RNDN);
  const bool ok = mpfr_cmp_d(diff, 1e-6) < 0;
  if (ok) {
    mpfr_get_z(out.backend().data(), rounded, MPFR_RNDN);
  }
  mpfr_clears(pi, theta, s, term, factor, acc, rounded, diff,
              static_cast<mpfr_ptr>(nullptr));
  return ok;
}

}  // namespace

Integer verlinde_rank_numeric(Level ell, const WeightVector& weights, int genus) {
  require(genus >= 0, "verlinde_rank_numeric: genus >= 0");
  require_admissible(ell, weights);
  Integer out;
  // 128-bit start, doubling on tolerance failure, at most three retries.
  for (mpfr_prec_t prec = 128; prec <= 1024; prec *= 2) {
    if (try_eval(ell.get(), weights.get(), genus, prec, out)) return out;
  }
  throw integrality_error(
      "verlinde_rank_numeric: no integer within 1e-6 after precision retries");
}

}  // namespace sl2cb
