#include "oneshot/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace oneshot {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488016887;
constexpr double kSqrt2Pi = 2.5066282746310005024157653;
constexpr double kPi = 3.1415926535897932384626434;

// Acklam's rational approximation to the normal quantile (relative error
// below 1.2e-9 over (0,1)); used as the initial guess.
double acklam(double u) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double low = 0.02425;

    if (u < low) {
        const double q = std::sqrt(-2.0 * std::log(u));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (u > 1.0 - low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - u));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = u - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}
}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_inv_cdf(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::invalid_argument("normal_inv_cdf: u must lie in (0, 1)");
    double x = acklam(u);
    // One Halley step against the forward CDF.  Skipped in the far tails
    // where exp(x^2/2) would overflow and the guess is already accurate.
    if (x * x < 1200.0) {
        const double err = normal_cdf(x) - u;
        const double t = err * kSqrt2Pi * std::exp(0.5 * x * x);
        x -= t / (1.0 + 0.5 * x * t);
    }
    return x;
}

double cauchy_cdf(double x) { return 0.5 + std::atan(x) / kPi; }

double cauchy_inv_cdf(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::invalid_argument("cauchy_inv_cdf: u must lie in (0, 1)");
    return std::tan(kPi * (u - 0.5));
}

}  // namespace oneshot
