#include "oneshot/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oneshot/distributions.hpp"
#include "oneshot/rng.hpp"
#include "oneshot/sample.hpp"

namespace oneshot {

std::string to_string(FunctionId f) {
    switch (f) {
        case FunctionId::Sphere: return "sphere";
        case FunctionId::Rastrigin: return "rastrigin";
        case FunctionId::Cigar: return "cigar";
    }
    return "?";
}

FunctionId function_from_string(std::string_view name) {
    if (name == "sphere") return FunctionId::Sphere;
    if (name == "rastrigin") return FunctionId::Rastrigin;
    if (name == "cigar") return FunctionId::Cigar;
    throw std::invalid_argument("unknown objective function '" + std::string(name) +
                                "' (expected sphere, rastrigin or cigar)");
}

ObjectiveInstance draw_instance(FunctionId function, std::size_t d, std::size_t d_prime,
                                const Prior& prior, std::uint64_t seed) {
    if (d_prime < 1 || d_prime > d)
        throw std::invalid_argument("draw_instance: need 1 <= d' <= d");

    ObjectiveInstance instance;
    instance.function = function;
    instance.d = d;
    instance.prior_scale = prior.scale;

    Rng rng(substream(seed, 30));
    // Mask: first d' entries of a partial Fisher-Yates pass over {0,...,d-1}.
    std::vector<std::uint32_t> indices(d);
    std::iota(indices.begin(), indices.end(), 0u);
    for (std::size_t i = 0; i < d_prime; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(d - i));
        std::swap(indices[i], indices[j]);
    }
    instance.mask.assign(indices.begin(), indices.begin() + d_prime);
    std::sort(instance.mask.begin(), instance.mask.end());

    instance.x_star.resize(d_prime);
    for (double& coord : instance.x_star) {
        switch (prior.kind) {
            case Prior::Kind::NormalStd: coord = rng.next_gaussian(); break;
            case Prior::Kind::NormalScaled: coord = prior.scale * rng.next_gaussian(); break;
            case Prior::Kind::CauchyScaled: {
                const double u = clamp_unit(rng.next_double());
                coord = prior.scale * cauchy_inv_cdf(u);
                break;
            }
        }
    }
    return instance;
}

double evaluate(const ObjectiveInstance& instance, std::span<const double> x) {
    if (x.size() != instance.d) throw std::invalid_argument("evaluate: dimension mismatch");
    constexpr double two_pi = 6.2831853071795864769252868;
    const std::size_t dp = instance.d_prime();
    double value = 0.0;
    switch (instance.function) {
        case FunctionId::Sphere:
            for (std::size_t j = 0; j < dp; ++j) {
                const double z = x[instance.mask[j]] - instance.x_star[j];
                value += z * z;
            }
            break;
        case FunctionId::Cigar:
            for (std::size_t j = 0; j < dp; ++j) {
                const double z = x[instance.mask[j]] - instance.x_star[j];
                value += (j == 0 ? 1.0 : 1e6) * z * z;
            }
            break;
        case FunctionId::Rastrigin:
            value = 10.0 * static_cast<double>(dp);
            for (std::size_t j = 0; j < dp; ++j) {
                const double z = x[instance.mask[j]] - instance.x_star[j];
                value += z * z - 10.0 * std::cos(two_pi * z);
            }
            break;
    }
    return value;
}

double distance_to_optimum(const ObjectiveInstance& instance, std::span<const double> x) {
    if (x.size() != instance.d) throw std::invalid_argument("distance_to_optimum: dimension mismatch");
    double dist2 = 0.0;
    for (std::size_t j = 0; j < instance.d_prime(); ++j) {
        const double z = x[instance.mask[j]] - instance.x_star[j];
        dist2 += z * z;
    }
    return std::sqrt(dist2);
}

}  // namespace oneshot
