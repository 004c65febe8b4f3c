// Minimum partition of a sequence into k-heapable subsequences (MHS_k).
//
// Greedy rule: place each element below the largest free slot whose value
// is <= the element, or start a new heap when no slot fits. For k = 1 this
// is patience sorting and the count equals the number of decreasing piles.

#ifndef HEAPABLE_GREEDY_HPP
#define HEAPABLE_GREEDY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "heap_forest.hpp"

namespace heapable {

struct Placement {
    std::size_t index;
    HeapId heap;
    std::optional<NodeId> parent;  // nullopt: element is a heap root
};

template <class T>
struct MhsResult {
    std::size_t k;
    std::size_t count;
    std::vector<Placement> assignment;
    HeapForest<T> forest;
};

template <class T>
void require_distinct(std::span<const T> seq) {
    std::vector<T> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("sequence values must be pairwise distinct");
}

template <class T>
MhsResult<T> greedy_mhs(std::span<const T> seq, std::size_t k) {
    if (k < 1)
        throw std::invalid_argument("arity k must be at least 1");
    require_distinct(seq);
    MhsResult<T> result{k, 0, {}, HeapForest<T>(k)};
    result.assignment.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const NodeId id = result.forest.insert_greedy(seq[i]);
        const auto& node = result.forest.nodes()[id];
        result.assignment.push_back(Placement{i, node.heap, node.parent});
    }
    result.count = result.forest.heap_count();
    return result;
}

template <class T>
MhsResult<T> greedy_mhs(const std::vector<T>& seq, std::size_t k) {
    return greedy_mhs(std::span<const T>(seq), k);
}

/// Count-only greedy. Skips forest bookkeeping and the distinctness check;
/// meant for large Monte Carlo runs over permutations.
template <class T>
std::size_t greedy_count(std::span<const T> seq, std::size_t k) {
    std::map<T, std::size_t> free;  // slot value -> free slots left
    std::size_t heaps = 0;
    for (const T& x : seq) {
        auto it = free.upper_bound(x);
        if (it == free.begin()) {
            ++heaps;
        } else {
            --it;
            if (--it->second == 0)
                free.erase(it);
        }
        free.emplace(x, k);
    }
    return heaps;
}

template <class T>
bool is_k_heapable(std::span<const T> seq, std::size_t k) {
    return greedy_mhs(seq, k).count <= 1;
}

template <class T>
bool is_k_heapable(const std::vector<T>& seq, std::size_t k) {
    return is_k_heapable(std::span<const T>(seq), k);
}

/// Rebuilds the heaps from an assignment and checks every heap invariant.
/// Returns an empty string on success.
template <class T>
std::string replay_assignment(std::span<const T> seq, const MhsResult<T>& result) {
    if (result.assignment.size() != seq.size())
        return "assignment length differs from sequence length";
    HeapForest<T> replay(result.k);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Placement& p = result.assignment[i];
        if (p.index != i)
            return "assignment out of order at " + std::to_string(i);
        NodeId id;
        try {
            id = replay.attach(seq[i], p.parent);
        } catch (const std::exception& e) {
            return "element " + std::to_string(i) + ": " + e.what();
        }
        if (replay.nodes()[id].heap != p.heap)
            return "heap id mismatch at " + std::to_string(i);
    }
    if (replay.heap_count() != result.count)
        return "heap count differs from reported count";
    return replay.validate();
}

inline constexpr std::size_t kBruteForceDefaultCap = 10;

/// Exhaustive minimum over every legal sequence of placements. States are
/// the sorted multisets of free-slot values (as ranks), deduplicated per step.
template <class T>
std::size_t brute_force_mhs(std::span<const T> seq, std::size_t k,
                            std::size_t cap = kBruteForceDefaultCap) {
    if (seq.size() > cap)
        throw std::length_error("brute_force_mhs: sequence of length " +
                                std::to_string(seq.size()) + " exceeds cap " +
                                std::to_string(cap));
    if (k < 1)
        throw std::invalid_argument("arity k must be at least 1");
    require_distinct(seq);

    std::vector<T> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    auto rank = [&](const T& v) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                sorted.begin());
    };

    using State = std::vector<int>;  // sorted slot ranks
    std::map<State, std::size_t> layer{{State{}, 0}};
    for (const T& value : seq) {
        const int x = rank(value);
        std::map<State, std::size_t> next;
        auto relax = [&](State s, std::size_t heaps) {
            auto [it, fresh] = next.emplace(std::move(s), heaps);
            if (!fresh && heaps < it->second)
                it->second = heaps;
        };
        for (const auto& [state, heaps] : layer) {
            State grown = state;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), x), k, x);
            relax(grown, heaps + 1);  // new heap
            for (std::size_t i = 0; i < state.size(); ++i) {
                if (state[i] > x)
                    break;
                if (i > 0 && state[i] == state[i - 1])
                    continue;
                State s = state;
                s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
                s.insert(std::upper_bound(s.begin(), s.end(), x), k, x);
                relax(std::move(s), heaps);
            }
        }
        layer = std::move(next);
    }
    std::size_t best = seq.empty() ? 0 : seq.size();
    for (const auto& [state, heaps] : layer)
        best = std::min(best, heaps);
    return best;
}

template <class T>
std::size_t brute_force_mhs(const std::vector<T>& seq, std::size_t k,
                            std::size_t cap = kBruteForceDefaultCap) {
    return brute_force_mhs(std::span<const T>(seq), k, cap);
}

}  // namespace heapable

#endif  // HEAPABLE_GREEDY_HPP
