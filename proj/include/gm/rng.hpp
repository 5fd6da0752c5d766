#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "gm/types.hpp"

namespace gm {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Independent, reproducible stream for (master seed, stream index).
// Machine i in a parallel run draws from derive_stream(master, i).
inline Rng derive_stream(std::uint64_t master_seed, std::uint64_t stream_index) {
    return Rng(splitmix64(splitmix64(master_seed) ^ splitmix64(stream_index)));
}

inline Permutation random_permutation(int n, Rng& rng) {
    if (n < 1) throw invalid_size_error("permutation size must be at least 1");
    Permutation perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace gm
