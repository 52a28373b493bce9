#pragma once

namespace oneshot {

// Standard normal CDF, computed through erfc for full tail accuracy.
double normal_cdf(double x);

// Standard normal quantile.  Rational initial guess refined by one Halley
// step against normal_cdf; absolute round-trip error below 1e-12 on
// u in [1e-10, 1 - 1e-10].  Rejects u outside (0, 1).
double normal_inv_cdf(double u);

// Standard Cauchy CDF and quantile, C(x) = 1/2 + atan(x)/pi and
// C^{-1}(u) = tan(pi (u - 1/2)).  The quantile rejects u outside (0, 1).
double cauchy_cdf(double x);
double cauchy_inv_cdf(double u);

}  // namespace oneshot
