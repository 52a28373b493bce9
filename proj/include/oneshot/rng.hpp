#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oneshot {

constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derives an independent substream seed from a master seed and a list of
// integer labels (method index, replica index, purpose tag, ...).  The same
// (seed, labels) always yields the same substream.
template <class... Labels>
constexpr std::uint64_t substream(std::uint64_t seed, Labels... labels) {
    std::uint64_t h = seed;
    ((h = splitmix64(h) ^ (splitmix64(h) + static_cast<std::uint64_t>(labels))), ...);
    splitmix64(h);
    return splitmix64(h);
}

// xoshiro256++ (Blackman & Vigna).  Chosen over std::mt19937_64 for speed in
// replica-heavy Monte-Carlo loops; output is fully determined by the seed and
// identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 significant bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in {0, ..., bound-1}, unbiased (Lemire's multiply-shift
    // with the rare rejection fallback).
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Standard normal via Box-Muller (cos branch only).
    double next_gaussian() {
        const double u1 = 1.0 - next_double();  // (0, 1], keeps the log finite
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Uniform random permutation of {0, ..., n-1} (Fisher-Yates).
    std::vector<std::uint32_t> permutation(std::size_t n) {
        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(perm[i - 1], perm[j]);
        }
        return perm;
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::array<std::uint64_t, 4> state_{};
};

}  // namespace oneshot
