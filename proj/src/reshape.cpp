#include "oneshot/reshape.hpp"

#include <cmath>
#include <stdexcept>

#include "oneshot/distributions.hpp"
#include "oneshot/rng.hpp"

namespace oneshot {

void ReshapeSpec::validate() const {
    if (lambda < 0.0) throw std::invalid_argument("ReshapeSpec: lambda must be >= 0");
    if (lambda == 0.0 && target != TargetSpace::UnitCube)
        throw std::invalid_argument("ReshapeSpec: lambda = 0 only valid in the unit cube");
    if (rescale && target == TargetSpace::Unbounded)
        throw std::invalid_argument("ReshapeSpec: rescale and unbounded target are mutually exclusive");
}

namespace {
double inv_cdf(double u, Distribution distribution) {
    return distribution == Distribution::Normal ? normal_inv_cdf(u) : cauchy_inv_cdf(u);
}
}  // namespace

UnitSample recenter(const UnitSample& sample, double lambda, Distribution distribution) {
    if (lambda < 0.0) throw std::invalid_argument("recenter: lambda must be >= 0");
    UnitSample out = sample;
    for (double& u : out.data()) {
        if (lambda == 0.0) {
            u = 0.5;
            continue;
        }
        u = clamp_unit(normal_cdf(lambda * inv_cdf(clamp_unit(u), distribution)));
    }
    return out;
}

double meta_lambda(double budget, double dimension) {
    if (budget < 1.0) throw std::invalid_argument("meta_lambda: budget must be >= 1");
    if (dimension < 2.0)
        throw std::invalid_argument(
            "meta_lambda: dimension must be >= 2 (log(dimension) too small; supply lambda explicitly)");
    return (1.0 + std::log(budget)) / (4.0 * std::log(dimension));
}

RealSample convert_unbounded(const UnitSample& sample, double lambda, Distribution distribution) {
    if (lambda <= 0.0) throw std::invalid_argument("convert_unbounded: lambda must be > 0");
    RealSample out(sample.size(), sample.dim());
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.dim(); ++j)
            out(i, j) = lambda * inv_cdf(clamp_unit(sample(i, j)), distribution);
    return out;
}

UnitSample add_middle_point(const UnitSample& sample) {
    UnitSample out = sample;
    for (std::size_t j = 0; j < out.dim(); ++j) out(0, j) = 0.5;
    return out;
}

UnitSample oppose(const UnitSample& sample, Opposition mode, std::uint64_t seed) {
    if (mode == Opposition::None) return sample;
    const std::size_t n = sample.size();
    if (n < 2) throw std::invalid_argument("oppose: needs at least 2 points");
    const std::size_t d = sample.dim();
    const std::size_t pairs = n / 2;

    UnitSample out = sample;
    Rng rng(substream(seed, 6));
    if (n % 2 == 1)
        for (std::size_t j = 0; j < d; ++j) out(pairs, j) = 0.5;  // unpaired slot
    for (std::size_t i = 0; i < pairs; ++i) {
        const std::size_t dst = n - pairs + i;
        const double r = mode == Opposition::Opposite ? 1.0 : rng.next_double();
        for (std::size_t j = 0; j < d; ++j) {
            double u = 0.5 + r * (0.5 - sample(i, j));
            if (u >= 1.0) u = 1.0 - kUnitClamp;  // x = 0 reflects onto the closed face
            out(dst, j) = u;
        }
    }
    return out;
}

UnitSample rescale_to_bounds(const UnitSample& sample) {
    const std::size_t n = sample.size();
    const std::size_t d = sample.dim();
    if (n < 2) throw std::invalid_argument("rescale_to_bounds: needs at least 2 points");

    UnitSample out = sample;
    for (std::size_t j = 0; j < d; ++j) {
        double lo = sample(0, j), hi = sample(0, j);
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::min(lo, sample(i, j));
            hi = std::max(hi, sample(i, j));
        }
        if (!(hi > lo))
            throw std::invalid_argument("rescale_to_bounds: column " + std::to_string(j) +
                                        " is degenerate (max == min)");
        const double scale = 1.0 / (hi - lo);
        for (std::size_t i = 0; i < n; ++i)
            out(i, j) = clamp_unit((sample(i, j) - lo) * scale);
    }
    return out;
}

}  // namespace oneshot
