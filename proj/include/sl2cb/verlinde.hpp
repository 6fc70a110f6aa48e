#pragma once

// Numeric cross-check of conformal-blocks ranks via the trigonometric Verlinde
// sum, evaluated in controlled multiprecision floating point.  This is the one
// deliberately non-exact route: it must land within a fixed tolerance of an
// integer or fail hard.  It is never used as a fallback for the exact routes.

#include "sl2cb/fusion.hpp"
#include "sl2cb/numeric.hpp"

namespace sl2cb {

// Evaluates
//   ((ell+2)/2)^(genus-1) * sum_{j=0}^{ell}
//       prod_i sin((lambda_i+1)(j+1)pi/(ell+2))
//       / sin((j+1)pi/(ell+2))^(2*genus + n - 2)
// at 128-bit mantissa, doubling the precision on tolerance failure (at most
// three retries).  The result must be within 1e-6 of an integer; otherwise an
// integrality_error is thrown.
Integer verlinde_rank_numeric(Level ell, const WeightVector& weights, int genus = 0);

}  // namespace sl2cb
