#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace oneshot {

// Lowest representable unit coordinate used before inverse-CDF conversion;
// keeps g^{-1} finite at both ends.
inline constexpr double kUnitClamp = 1e-12;

inline double clamp_unit(double u) {
    if (u < kUnitClamp) return kUnitClamp;
    if (u > 1.0 - kUnitClamp) return 1.0 - kUnitClamp;
    return u;
}

// n points in the half-open unit cube [0,1)^d, row-major.
class UnitSample {
  public:
    UnitSample() = default;
    UnitSample(std::size_t n, std::size_t d) : n_(n), d_(d), data_(n * d, 0.0) {
        if (n == 0 || d == 0) throw std::invalid_argument("UnitSample: n and d must be >= 1");
    }

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * d_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * d_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * d_, d_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * d_, d_}; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    // Invariant check: every coordinate in [0, 1).
    bool in_unit_cube() const {
        for (double u : data_)
            if (!(u >= 0.0 && u < 1.0)) return false;
        return true;
    }

  private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<double> data_;
};

// n points in R^d after conversion out of the unit cube.
class RealSample {
  public:
    RealSample() = default;
    RealSample(std::size_t n, std::size_t d) : n_(n), d_(d), data_(n * d, 0.0) {}

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * d_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * d_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * d_, d_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * d_, d_}; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

  private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<double> data_;
};

}  // namespace oneshot
