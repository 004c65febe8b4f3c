// Forests of k-ary min-heaps built by successive leaf insertion, with the
// free-slot bookkeeping used by the greedy partition algorithm.
//
// A node with c children exposes k - c free slots, each valued at the node's
// own value: any later element >= that value may be attached there. The
// sorted list of all slot values is the forest's signature.

#ifndef HEAPABLE_HEAP_FOREST_HPP
#define HEAPABLE_HEAP_FOREST_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace heapable {

using NodeId = std::size_t;
using HeapId = std::size_t;

template <class T>
struct HeapNode {
    T value;
    std::size_t index;             // position of the element in the input
    HeapId heap;
    std::optional<NodeId> parent;  // nullopt for roots
    std::size_t children = 0;
};

/// Sorted (non-decreasing) multiset of free-slot values.
template <class T>
using Signature = std::vector<T>;

/// True iff for every v, the slots of `a` that are <= v, plus `spare`, are at
/// least as many as the slots of `b` that are <= v. `spare` is the number of
/// extra heaps the forest behind `b` has opened.
template <class T>
bool dominates(const Signature<T>& a, const Signature<T>& b, std::size_t spare = 0) {
    if (a.size() + spare < b.size())
        return false;
    for (std::size_t i = spare; i < b.size(); ++i)
        if (b[i] < a[i - spare])
            return false;
    return true;
}

template <class T>
class HeapForest {
public:
    explicit HeapForest(std::size_t arity) : k_(arity) {
        if (arity < 1)
            throw std::invalid_argument("heap arity must be at least 1");
    }

    std::size_t arity() const noexcept { return k_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t heap_count() const noexcept { return roots_.size(); }
    const std::vector<HeapNode<T>>& nodes() const noexcept { return nodes_; }
    const std::vector<NodeId>& roots() const noexcept { return roots_; }

    /// Slot value -> number of free slots carrying it. Values are distinct
    /// node values, so each key belongs to exactly one node.
    std::map<T, std::size_t> open_slots() const {
        std::map<T, std::size_t> out;
        for (const auto& [value, id] : open_)
            out.emplace(value, k_ - nodes_[id].children);
        return out;
    }

    std::size_t slot_count() const noexcept {
        // k*n - (n - d): every node offers k slots, every non-root uses one.
        return k_ * nodes_.size() - (nodes_.size() - roots_.size());
    }

    /// Node owning the largest free slot with value <= x, if any.
    std::optional<NodeId> greedy_parent(const T& x) const {
        auto it = open_.upper_bound(x);
        if (it == open_.begin())
            return std::nullopt;
        return std::prev(it)->second;
    }

    /// Every node that can legally take x as a new child.
    std::vector<NodeId> legal_parents(const T& x) const {
        std::vector<NodeId> out;
        for (auto it = open_.begin(); it != open_.end() && !(x < it->first); ++it)
            out.push_back(it->second);
        return out;
    }

    /// Attach x below `parent`, or as the root of a new heap when parent is
    /// nullopt. Throws if the attachment would break heap order or arity.
    NodeId attach(const T& x, std::optional<NodeId> parent) {
        if (values_.count(x))
            throw std::invalid_argument("duplicate value in heap forest");
        const NodeId id = nodes_.size();
        HeapId heap;
        if (parent) {
            if (*parent >= nodes_.size())
                throw std::out_of_range("unknown parent node");
            HeapNode<T>& p = nodes_[*parent];
            if (p.children >= k_)
                throw std::invalid_argument("parent node has no free slot");
            if (x < p.value)
                throw std::invalid_argument("child value smaller than parent");
            heap = p.heap;
            if (++p.children == k_)
                open_.erase(p.value);
        } else {
            heap = roots_.size();
            roots_.push_back(id);
        }
        nodes_.push_back(HeapNode<T>{x, nodes_.size(), heap, parent, 0});
        values_.insert(x);
        open_.emplace(x, id);
        return id;
    }

    /// Tightest-fit insertion: below the largest slot <= x, else a new heap.
    NodeId insert_greedy(const T& x) { return attach(x, greedy_parent(x)); }

    Signature<T> signature() const {
        Signature<T> sig;
        sig.reserve(slot_count());
        for (const auto& [value, id] : open_)
            sig.insert(sig.end(), k_ - nodes_[id].children, value);
        return sig;  // map iteration is already sorted
    }

    /// Empty string when every structural invariant holds, otherwise a
    /// description of the first violation.
    std::string validate() const {
        std::vector<std::size_t> kids(nodes_.size(), 0);
        std::size_t roots = 0;
        for (NodeId id = 0; id < nodes_.size(); ++id) {
            const auto& node = nodes_[id];
            if (!node.parent) {
                if (node.heap >= roots_.size() || roots_[node.heap] != id)
                    return "root " + std::to_string(id) + " not registered";
                ++roots;
                continue;
            }
            const auto& p = nodes_[*node.parent];
            if (node.value < p.value)
                return "heap order violated at node " + std::to_string(id);
            if (!(p.index < node.index))
                return "insertion order violated at node " + std::to_string(id);
            if (p.heap != node.heap)
                return "node " + std::to_string(id) + " in wrong heap";
            ++kids[*node.parent];
        }
        if (roots != roots_.size())
            return "root count mismatch";
        std::size_t slots = 0;
        for (NodeId id = 0; id < nodes_.size(); ++id) {
            if (kids[id] != nodes_[id].children || kids[id] > k_)
                return "child count wrong at node " + std::to_string(id);
            slots += k_ - kids[id];
        }
        if (slots != slot_count() || slots != signature().size())
            return "slot count mismatch";
        return {};
    }

private:
    std::size_t k_;
    std::vector<HeapNode<T>> nodes_;
    std::vector<NodeId> roots_;
    std::map<T, NodeId> open_;  // nodes with at least one free slot
    std::set<T> values_;
};

template <class T>
Signature<T> signature(const HeapForest<T>& forest) {
    return forest.signature();
}

}  // namespace heapable

#endif  // HEAPABLE_HEAP_FOREST_HPP
