// Robinson-Schensted style correspondence between permutations and pairs
// (P, Q) of equally shaped heap tableaux with Q standard.

#ifndef HEAPABLE_RS_HPP
#define HEAPABLE_RS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tableau.hpp"

namespace heapable {

struct TableauPair {
    HeapTableau p;
    HeapTableau q;

    bool operator==(const TableauPair&) const = default;
};

/// Inserts seq[i] into P and records i+1 in Q at the cell the insertion
/// added. `on_step(i, pair, trace)` runs after each element.
template <class OnStep>
TableauPair rs_insert_sequence(std::span<const Value> seq, std::size_t k, OnStep&& on_step) {
    TableauPair pq{HeapTableau(k), HeapTableau(k)};
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const BumpTrace trace = insert_in_place(pq.p, seq[i]);
        auto& qvec = pq.q.vectors()[trace.final_cell.address];
        qvec.push_back(static_cast<Value>(i + 1));
        if (qvec.size() != trace.final_cell.row)
            throw std::logic_error("recording tableau out of step with insertion");
        on_step(i, std::as_const(pq), trace);
    }
    return pq;
}

inline TableauPair rs_insert_sequence(std::span<const Value> seq, std::size_t k) {
    return rs_insert_sequence(seq, k, [](std::size_t, const TableauPair&, const BumpTrace&) {});
}

inline void require_permutation(std::span<const Value> perm) {
    std::vector<bool> seen(perm.size() + 1, false);
    for (Value v : perm) {
        if (v < 1 || static_cast<std::size_t>(v) > perm.size() || seen[v])
            throw std::invalid_argument("input is not a permutation of 1.." +
                                        std::to_string(perm.size()));
        seen[v] = true;
    }
}

inline TableauPair build_PQ(std::span<const Value> perm, std::size_t k) {
    require_permutation(perm);
    return rs_insert_sequence(perm, k);
}

inline TableauPair build_PQ(const std::vector<Value>& perm, std::size_t k) {
    return build_PQ(std::span<const Value>(perm), k);
}

/// Recovers the inserted sequence from (P, Q), last element first: the cell
/// holding max(Q) is where the final insertion ended; its P entry is walked
/// back up, each time replacing the largest smaller entry of the parent
/// vector, until the root vector yields the inserted value. P may hold any
/// distinct values. Pairs outside the image raise TableauError.
inline std::vector<Value> invert_PQ(const HeapTableau& p, const HeapTableau& q) {
    if (p.arity() != q.arity())
        throw TableauError("P and Q have different arities");
    if (!(p.shape() == q.shape()))
        throw TableauError("P and Q have different shapes");
    if (!is_standard(q))
        throw TableauError("Q is not a standard heap tableau");
    {
        auto bad = heap_tableau_violations(p);
        if (!bad.empty())
            throw TableauError("P is not a heap tableau: " + bad.front().message,
                               bad.front().cell);
        std::vector<Value> all;
        for (const auto& [a, vec] : p.vectors())
            all.insert(all.end(), vec.begin(), vec.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw TableauError("P has repeated values");
    }

    HeapTableau pp = p;
    HeapTableau qq = q;
    const std::size_t n = q.size();
    std::vector<Value> seq(n);
    for (std::size_t m = n; m >= 1; --m) {
        const Cell cell = *qq.find(static_cast<Value>(m));
        auto& pvec = pp.vectors().at(cell.address);
        auto& qvec = qq.vectors().at(cell.address);
        if (cell.row != qvec.size() || cell.row != pvec.size())
            throw TableauError("label " + std::to_string(m) + " is not last in its vector", cell);
        Value x = pvec.back();
        pvec.pop_back();
        qvec.pop_back();
        if (pvec.empty()) {
            pp.vectors().erase(cell.address);
            qq.vectors().erase(cell.address);
        }
        Address at = cell.address;
        while (!at.is_root()) {
            at = at.parent();
            auto& up = pp.vectors().at(at);
            auto pos = std::lower_bound(up.begin(), up.end(), x);
            if (pos == up.begin())
                throw TableauError("no entry below " + std::to_string(x) + " to unwind into",
                                   Cell{at, 1});
            --pos;
            std::swap(*pos, x);
        }
        seq[m - 1] = x;
    }
    if (!(rs_insert_sequence(seq, p.arity()) == TableauPair{p, q}))
        throw TableauError("pair is not produced by any insertion sequence");
    return seq;
}

inline std::vector<Value> invert_PQ(const TableauPair& pq) { return invert_PQ(pq.p, pq.q); }

}  // namespace heapable

#endif  // HEAPABLE_RS_HPP
