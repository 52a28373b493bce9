#include "oneshot/sequences.hpp"

#include <cmath>
#include <stdexcept>

#include "oneshot/rng.hpp"
#include "oneshot/sobol.hpp"

namespace oneshot {

std::string to_string(BaseSequenceKind kind) {
    switch (kind) {
        case BaseSequenceKind::Random: return "Random";
        case BaseSequenceKind::Grid: return "Grid";
        case BaseSequenceKind::LHS: return "LHS";
        case BaseSequenceKind::Jittered: return "Jittered";
        case BaseSequenceKind::Halton: return "Halton";
        case BaseSequenceKind::Hammersley: return "Hammersley";
        case BaseSequenceKind::Sobol: return "Sobol";
    }
    return "?";
}

std::vector<std::uint32_t> first_primes(std::size_t k) {
    std::vector<std::uint32_t> primes;
    primes.reserve(k);
    for (std::uint32_t candidate = 2; primes.size() < k; ++candidate) {
        bool is_prime = true;
        for (std::uint32_t p : primes) {
            if (static_cast<std::uint64_t>(p) * p > candidate) break;
            if (candidate % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime) primes.push_back(candidate);
    }
    return primes;
}

double radix_inverse(std::uint64_t k, std::uint32_t base) {
    if (base < 2) throw std::invalid_argument("radix_inverse: base must be >= 2");
    const double inv_base = 1.0 / base;
    double scale = inv_base;
    double value = 0.0;
    while (k > 0) {
        value += static_cast<double>(k % base) * scale;
        k /= base;
        scale *= inv_base;
    }
    return value;
}

double radix_inverse_permuted(std::uint64_t k, std::uint32_t base,
                              const std::vector<std::uint32_t>& perm) {
    if (base < 2) throw std::invalid_argument("radix_inverse_permuted: base must be >= 2");
    if (perm.size() != base)
        throw std::invalid_argument("radix_inverse_permuted: permutation size != base");
    const double inv_base = 1.0 / base;
    double scale = inv_base;
    double value = 0.0;
    while (k > 0) {
        value += static_cast<double>(perm[k % base]) * scale;
        k /= base;
        scale *= inv_base;
    }
    return value;
}

namespace {

// Largest k with k^d <= n.
std::size_t grid_side(std::size_t n, std::size_t d) {
    std::size_t k = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(d))));
    if (k < 1) k = 1;
    auto pow_fits = [&](std::size_t side) {
        std::size_t total = 1;
        for (std::size_t j = 0; j < d; ++j) {
            if (side != 0 && total > n / side) return false;
            total *= side;
        }
        return total <= n;
    };
    while (!pow_fits(k)) --k;       // guard against floating-point rounding
    while (pow_fits(k + 1)) ++k;
    return k;
}

void fill_uniform(UnitSample& out, std::size_t first_row, Rng& rng) {
    for (std::size_t i = first_row; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.dim(); ++j) out(i, j) = rng.next_double();
}

UnitSample gen_random(std::size_t n, std::size_t d, std::uint64_t seed) {
    UnitSample out(n, d);
    Rng rng(substream(seed, 0));
    fill_uniform(out, 0, rng);
    return out;
}

UnitSample gen_grid(std::size_t n, std::size_t d, std::uint64_t seed) {
    UnitSample out(n, d);
    const std::size_t k = grid_side(n, d);
    std::size_t cells = 1;
    for (std::size_t j = 0; j < d; ++j) cells *= k;
    std::vector<std::size_t> index(d, 0);
    for (std::size_t i = 0; i < cells; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            out(i, j) = (static_cast<double>(index[j]) + 0.5) / static_cast<double>(k);
        for (std::size_t j = 0; j < d; ++j) {   // mixed-radix increment
            if (++index[j] < k) break;
            index[j] = 0;
        }
    }
    Rng rng(substream(seed, 1));
    fill_uniform(out, cells, rng);
    return out;
}

UnitSample gen_lhs(std::size_t n, std::size_t d, std::uint64_t seed) {
    UnitSample out(n, d);
    Rng rng(substream(seed, 2));
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<std::uint32_t> sigma(n);
    for (std::size_t j = 0; j < d; ++j) {
        std::iota(sigma.begin(), sigma.end(), 0u);
        for (std::size_t i = n; i > 1; --i)
            std::swap(sigma[i - 1], sigma[static_cast<std::size_t>(rng.below(i))]);
        for (std::size_t i = 0; i < n; ++i)
            out(i, j) = (static_cast<double>(sigma[i]) + rng.next_double()) * inv_n;
    }
    return out;
}

UnitSample gen_jittered(std::size_t n, std::size_t d, std::uint64_t seed) {
    UnitSample out(n, d);
    Rng rng(substream(seed, 3));
    const std::size_t k = grid_side(n, d);
    std::size_t cells = 1;
    for (std::size_t j = 0; j < d; ++j) cells *= k;
    const double inv_k = 1.0 / static_cast<double>(k);
    std::vector<std::size_t> index(d, 0);
    for (std::size_t i = 0; i < cells; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            out(i, j) = (static_cast<double>(index[j]) + rng.next_double()) * inv_k;
        for (std::size_t j = 0; j < d; ++j) {
            if (++index[j] < k) break;
            index[j] = 0;
        }
    }
    fill_uniform(out, cells, rng);
    return out;
}

// Halton starts at index 1 so no point is the origin.
UnitSample gen_halton(std::size_t n, std::size_t d) {
    UnitSample out(n, d);
    const auto primes = first_primes(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) out(i, j) = radix_inverse(i + 1, primes[j]);
    return out;
}

// Hammersley: first coordinate (i + 1/2) / n, the rest radical inverses.
UnitSample gen_hammersley(std::size_t n, std::size_t d) {
    UnitSample out(n, d);
    const auto primes = d > 1 ? first_primes(d - 1) : std::vector<std::uint32_t>{};
    for (std::size_t i = 0; i < n; ++i) {
        out(i, 0) = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        for (std::size_t j = 1; j < d; ++j) out(i, j) = radix_inverse(i, primes[j - 1]);
    }
    return out;
}

}  // namespace

UnitSample gen_base(BaseSequenceKind kind, std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_base: n must be >= 1");
    if (d == 0) throw std::invalid_argument("gen_base: d must be >= 1");
    switch (kind) {
        case BaseSequenceKind::Random: return gen_random(n, d, seed);
        case BaseSequenceKind::Grid: return gen_grid(n, d, seed);
        case BaseSequenceKind::LHS: return gen_lhs(n, d, seed);
        case BaseSequenceKind::Jittered: return gen_jittered(n, d, seed);
        case BaseSequenceKind::Halton: return gen_halton(n, d);
        case BaseSequenceKind::Hammersley: return gen_hammersley(n, d);
        case BaseSequenceKind::Sobol: return sobol_points(n, d, SobolTable::bundled());
    }
    throw std::invalid_argument("gen_base: unknown kind");
}

UnitSample scramble(BaseSequenceKind kind, std::size_t n, std::size_t d, std::uint64_t seed) {
    if (kind != BaseSequenceKind::Halton && kind != BaseSequenceKind::Hammersley)
        throw std::invalid_argument("scramble: only Halton and Hammersley are radical-inverse based");
    if (n == 0) throw std::invalid_argument("scramble: n must be >= 1");
    if (d == 0) throw std::invalid_argument("scramble: d must be >= 1");

    const bool hammersley = kind == BaseSequenceKind::Hammersley;
    const std::size_t inverse_dims = hammersley ? d - 1 : d;
    const auto primes = first_primes(inverse_dims);

    // One random digit permutation per base, fixing 0 (so expansions stay
    // finite: trailing zero digits map to zero).
    std::vector<std::vector<std::uint32_t>> perms(inverse_dims);
    for (std::size_t j = 0; j < inverse_dims; ++j) {
        Rng rng(substream(seed, 4, j));
        const std::uint32_t p = primes[j];
        std::vector<std::uint32_t> perm(p);
        perm[0] = 0;
        std::vector<std::uint32_t> rest(p - 1);
        for (std::uint32_t v = 1; v < p; ++v) rest[v - 1] = v;
        for (std::size_t i = rest.size(); i > 1; --i)
            std::swap(rest[i - 1], rest[static_cast<std::size_t>(rng.below(i))]);
        for (std::uint32_t v = 1; v < p; ++v) perm[v] = rest[v - 1];
        perms[j] = std::move(perm);
    }

    UnitSample out(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        if (hammersley) {
            out(i, 0) = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
            for (std::size_t j = 1; j < d; ++j)
                out(i, j) = radix_inverse_permuted(i, primes[j - 1], perms[j - 1]);
        } else {
            for (std::size_t j = 0; j < d; ++j)
                out(i, j) = radix_inverse_permuted(i + 1, primes[j], perms[j]);
        }
    }
    return out;
}

UnitSample shift(const UnitSample& sample, std::span<const double> v) {
    if (v.size() != sample.dim()) throw std::invalid_argument("shift: vector dimension mismatch");
    UnitSample out = sample;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.dim(); ++j) {
            double u = out(i, j) + v[j];
            if (u >= 1.0) u -= 1.0;
            out(i, j) = u;
        }
    return out;
}

UnitSample random_shift(const UnitSample& sample, std::uint64_t seed) {
    Rng rng(substream(seed, 5));
    std::vector<double> v(sample.dim());
    for (double& x : v) x = rng.next_double();
    return shift(sample, v);
}

}  // namespace oneshot
