// Seeded random streams. Trial i of an experiment draws from a generator
// derived only from (master seed, i), so results do not depend on how
// trials are scheduled across threads.

#ifndef HEAPABLE_RANDOM_HPP
#define HEAPABLE_RANDOM_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace heapable {

using Engine = std::mt19937_64;

/// Generator for one trial. std::seed_seq and mt19937_64 are fully specified
/// by the standard, so the stream is identical on every conforming platform.
inline Engine trial_engine(std::uint64_t master_seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                      static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32),
                      0x48454150u};
    return Engine(seq);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound), bound > 0, by rejection (no modulo bias).
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do {
        r = eng();
    } while (r >= limit);
    return r % bound;
}

/// Uniformly random permutation of 1..n (Fisher-Yates).
inline std::vector<std::int64_t> random_permutation(std::size_t n, Engine& eng) {
    std::vector<std::int64_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::int64_t{1});
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[uniform_below(eng, i)]);
    return perm;
}

}  // namespace heapable

#endif  // HEAPABLE_RANDOM_HPP
