#pragma once

#include <cstdint>

#include "oneshot/sample.hpp"

namespace oneshot {

enum class Distribution { Normal, Cauchy };
enum class TargetSpace { UnitCube, Unbounded };
enum class Opposition { None, Opposite, QuasiOpposite };

// Declarative reshaping stage applied after base-sequence generation.
struct ReshapeSpec {
    Distribution distribution = Distribution::Normal;
    double lambda = 1.0;
    TargetSpace target = TargetSpace::UnitCube;
    bool middle_point = false;
    Opposition opposition = Opposition::None;
    bool rescale = false;

    void validate() const;

    bool operator==(const ReshapeSpec&) const = default;
};

// Concentrates the sample towards the center of the cube: each coordinate u
// becomes g(lambda * g^{-1}(u)) (Normal) or g(lambda * C^{-1}(u)) (Cauchy),
// with g the standard normal CDF.  lambda = 0 sends every point to the
// middle; lambda = 1 with Normal is the identity up to clamping.
UnitSample recenter(const UnitSample& sample, double lambda, Distribution distribution);

// Recentering constant from budget and dimension, natural logs:
// (1 + ln(budget)) / (4 ln(dimension)).  Requires dimension >= 2.
double meta_lambda(double budget, double dimension);

// Coordinate-wise lambda * g^{-1}(u) (Normal) or lambda * C^{-1}(u) (Cauchy);
// the unit clamp keeps every output finite.
RealSample convert_unbounded(const UnitSample& sample, double lambda, Distribution distribution);

// Replaces the first point by the center of the cube; budget unchanged.
UnitSample add_middle_point(const UnitSample& sample);

// Keeps the first ceil(n/2) slots for base points and fills the rest with
// their reflections through the center: Opposite is 1 - x, QuasiOpposite is
// 0.5 + r * (0.5 - x) with a fresh r ~ U[0,1] per point.  When n is odd the
// base point without a partner is replaced by the center.
UnitSample oppose(const UnitSample& sample, Opposition mode, std::uint64_t seed);

// Affinely rescales each column so its sample min and max hit the cube
// boundaries, then clamps into [kUnitClamp, 1 - kUnitClamp].
UnitSample rescale_to_bounds(const UnitSample& sample);

}  // namespace oneshot
