#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oneshot/sample.hpp"

namespace oneshot {

enum class BaseSequenceKind { Random, Grid, LHS, Jittered, Halton, Hammersley, Sobol };

std::string to_string(BaseSequenceKind kind);

// First k primes, ascending: 2, 3, 5, ...
std::vector<std::uint32_t> first_primes(std::size_t k);

// Base-p digit reversal of k placed after the radix point.  Exact for
// k < p^52 (all digits representable in the 53-bit significand).
double radix_inverse(std::uint64_t k, std::uint32_t base);

// Same, with a digit permutation applied to every significant digit before
// reversal.  perm must be a permutation of {0,...,base-1}.
double radix_inverse_permuted(std::uint64_t k, std::uint32_t base,
                              const std::vector<std::uint32_t>& perm);

// Generates the raw space-filling design.  Random, LHS and Jittered consume
// the seed; Halton, Hammersley and Sobol ignore it; Grid uses it only for
// the n - k^d uniform filler points when n is not a perfect d-th power.
UnitSample gen_base(BaseSequenceKind kind, std::size_t n, std::size_t d, std::uint64_t seed);

// Scrambled Halton/Hammersley: one uniformly random digit permutation per
// base, fixing 0, applied to all significant digits of every index.
UnitSample scramble(BaseSequenceKind kind, std::size_t n, std::size_t d, std::uint64_t seed);

// Adds v to every point, coordinates taken modulo 1.
UnitSample shift(const UnitSample& sample, std::span<const double> v);

// shift() by a vector drawn uniformly from [0,1)^d.
UnitSample random_shift(const UnitSample& sample, std::uint64_t seed);

}  // namespace oneshot
