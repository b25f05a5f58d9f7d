#pragma once

// RSK row insertion (insertion tableau only) and seeded shape samplers:
// iid draws from a rational distribution alpha give weak-Schur-sampling
// shapes; uniform permutations give Plancherel shapes.

#include "partitions.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace keyl {

// Row-insert letter v (1-based) into a semistandard insertion tableau.
void rsk_insert(std::vector<std::vector<int>>& rows, int v);

Partition rsk_shape(const std::vector<int>& word, int d);

// Deterministic sampler: raw 64-bit mt19937_64 draws compared against exact
// cumulative thresholds floor(F_s * 2^64), so results are platform-fixed.
struct AlphaSampler {
    explicit AlphaSampler(const std::vector<Rat>& alpha, std::uint64_t seed);
    int draw(); // letter in [d]

    std::mt19937_64 rng;
    std::vector<Int> thresholds; // cumulative, scaled to 2^64
};

Partition sample_shape(long n, const std::vector<Rat>& alpha, std::uint64_t seed);

// Shape of RSK on a uniformly random permutation (Fisher-Yates with raw
// draws and rejection-free modulo via rejection sampling).
Partition sample_plancherel(long n, int d, std::uint64_t seed);

} // namespace keyl
