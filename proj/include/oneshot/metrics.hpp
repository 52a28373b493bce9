#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oneshot/sample.hpp"

namespace oneshot {

// Euclidean distance from x_star to the nearest sample point.
double min_distance(std::span<const double> x_star, const UnitSample& sample);
double min_distance(std::span<const double> x_star, const RealSample& sample);

struct DispersionEstimate {
    double value = 0.0;   // max over probes of the mean nearest-point distance
    double stderr_ = 0.0; // Monte-Carlo standard error at the maximizing probe
    std::size_t probes = 0;
    std::size_t replicas = 0;
};

// Stochastic dispersion sup_{x*} E inf_i ||x_i - x*||, the sup approximated
// by a max over a scrambled-Hammersley probe grid.  The sampler callback
// receives a per-replica substream seed and must return an (n, d) sample.
DispersionEstimate stochastic_dispersion(
    const std::function<UnitSample(std::uint64_t)>& sampler, std::size_t n, std::size_t d,
    std::size_t replicas, std::size_t probe_count, std::uint64_t seed);

enum class DiscrepancyMethod { ExactSmall, MonteCarlo };

struct DiscrepancyEstimate {
    double value = 0.0;
    DiscrepancyMethod method = DiscrepancyMethod::MonteCarlo;
    std::size_t box_count = 0;
};

// Star discrepancy with respect to anchored axis-parallel boxes.  ExactSmall
// (d <= 3, n <= 256) enumerates the grid induced by the sample coordinates;
// MonteCarlo maximizes |volume - empirical fraction| over random anchored
// boxes and therefore lower-bounds the true value.
DiscrepancyEstimate star_discrepancy(const UnitSample& sample, DiscrepancyMethod method,
                                     std::uint64_t seed = 0, std::size_t box_count = 100000);

// Volume of the unit ball in R^d, pi^{d/2} / Gamma(d/2 + 1).
double unit_ball_volume(std::size_t d);

// Gamma function (Lanczos approximation, g = 7, 9 terms).
double lanczos_gamma(double x);

struct BoundCheckReport {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    double estimate = 0.0;
    double stderr_ = 0.0;
    double bound = 0.0;
    bool pass = false;
    bool asserted = true;  // false when the parameters sit outside the regime of the claim

    // One line per report: name, params, estimate, stderr, bound, pass.
    std::string line() const;
};

// Empirical frequency that LHS(n) misses the corner box [0, m/n]^d versus
// the bound (1 - alpha^{d-1}/n^{1-1/d})^{alpha n^{1-1/d}}, alpha = m n^{1/d-1}.
// n and m must be powers of two.
BoundCheckReport check_lhs_corner_bound(std::size_t n, std::size_t m, std::size_t d,
                                        std::size_t replicas, std::uint64_t seed);

// (1-delta)-quantile of the distance from a random probe to jittered
// sampling (n = k^d) projected onto the first d' coordinates, versus
// 2^{1+1/d'} log(1/delta)^{1/d'} / (V_{d'} n)^{1/d'}.
BoundCheckReport check_projected_jittered(std::size_t n, std::size_t d, std::size_t d_prime,
                                          double delta, std::size_t replicas, std::uint64_t seed);

// Gaussian sample versus Gaussian optimum in R^d: the median nearest-point
// distance exceeds the median norm of the optimum (asserted for d >= 50);
// also reports median ||x*||^2 / d, which approaches 1 in high dimension.
BoundCheckReport check_middle_point_theorem(std::size_t n, std::size_t d, std::size_t replicas,
                                            std::uint64_t seed);

}  // namespace oneshot
