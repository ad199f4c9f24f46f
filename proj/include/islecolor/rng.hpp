#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace islecolor {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x);

// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

// Uniform real in [lo, hi).
double uniform_real(Rng& rng, double lo, double hi);

// `count` distinct values drawn uniformly from [0, n), in draw order.
std::vector<int> sample_distinct(Rng& rng, int n, int count);

}  // namespace islecolor
