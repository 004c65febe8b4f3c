// Sequence families separating MHS_k from MHS_{k-1}.

#ifndef HEAPABLE_FAMILIES_HPP
#define HEAPABLE_FAMILIES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace heapable {

/// [1, k+1, k, ..., 2]: MHS_j of it is k - j + 1 for every 1 <= j <= k.
inline std::vector<std::int64_t> gen_family_simple(std::int64_t k) {
    if (k < 2)
        throw std::invalid_argument("gen_family_simple requires k >= 2");
    std::vector<std::int64_t> seq{1};
    for (std::int64_t v = k + 1; v >= 2; --v)
        seq.push_back(v);
    return seq;
}

/// Largest value of block t: sum_{i=0..t} (t+1-i) (k-1)^i. Block 0 is the
/// leading 1.
inline std::int64_t family_x_block_top(std::int64_t k, std::int64_t t) {
    std::int64_t total = 0;
    std::int64_t power = 1;
    for (std::int64_t i = 0; i <= t; ++i) {
        if (power > std::numeric_limits<std::int64_t>::max() / (k * (t + 2)))
            throw std::out_of_range("gen_family_X: values overflow 64 bits");
        total += (t + 1 - i) * power;
        power *= k - 1;
    }
    return total;
}

/// [1, X_1, ..., X_n] where block X_t counts down through the consecutive
/// integers from family_x_block_top(k, t) to family_x_block_top(k, t-1) + 1,
/// so |X_t| = ((k-1)^{t+1} - 1) / (k - 2). The result is k-heapable while its
/// (k-1)-ary greedy partition needs n + 1 heaps.
inline std::vector<std::int64_t> gen_family_X(std::int64_t k, std::int64_t n) {
    if (k < 3)
        throw std::invalid_argument("gen_family_X requires k >= 3");
    if (n < 1)
        throw std::invalid_argument("gen_family_X requires n >= 1");
    if (n > 30)
        throw std::out_of_range("gen_family_X: block count too large");
    std::vector<std::int64_t> seq{1};
    for (std::int64_t t = 1; t <= n; ++t) {
        const std::int64_t top = family_x_block_top(k, t);
        const std::int64_t bottom = family_x_block_top(k, t - 1) + 1;
        if (top - bottom > 50'000'000)
            throw std::out_of_range("gen_family_X: sequence too long");
        for (std::int64_t v = top; v >= bottom; --v)
            seq.push_back(v);
    }
    return seq;
}

}  // namespace heapable

#endif  // HEAPABLE_FAMILIES_HPP
