#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace oneshot {

enum class FunctionId { Sphere, Rastrigin, Cigar };

std::string to_string(FunctionId f);
FunctionId function_from_string(std::string_view name);

// Prior distribution of the optimum on the critical coordinates.
struct Prior {
    enum class Kind { NormalStd, NormalScaled, CauchyScaled };
    Kind kind = Kind::NormalStd;
    double scale = 1.0;

    bool operator==(const Prior&) const = default;
};

// One benchmark problem draw: d' critical coordinates (randomly positioned
// among d) and the optimum location on them.  The remaining d - d'
// coordinates have exactly zero influence on the objective.
struct ObjectiveInstance {
    FunctionId function = FunctionId::Sphere;
    std::size_t d = 0;
    std::vector<std::uint32_t> mask;  // critical coordinate indices, sorted, size d'
    std::vector<double> x_star;       // optimum on the critical coordinates
    double prior_scale = 1.0;

    std::size_t d_prime() const { return mask.size(); }
};

ObjectiveInstance draw_instance(FunctionId function, std::size_t d, std::size_t d_prime,
                                const Prior& prior, std::uint64_t seed);

// Value-shifted objective: restricts x to the critical coordinates, sets
// z = x_restricted - x_star, and evaluates
//   Sphere:    sum z_j^2
//   Cigar:     z_1^2 + 1e6 sum_{j>=2} z_j^2
//   Rastrigin: 10 d' + sum (z_j^2 - 10 cos(2 pi z_j))
// so the minimum value is exactly 0 at the optimum.
double evaluate(const ObjectiveInstance& instance, std::span<const double> x);

// Euclidean distance to the optimum in the critical subspace.
double distance_to_optimum(const ObjectiveInstance& instance, std::span<const double> x);

}  // namespace oneshot
