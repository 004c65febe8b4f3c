// Heap tableaux: k-ary min-heaps of strictly increasing integer vectors.
//
// T(r, a) is the a-th entry (1-based) of the vector V_r at address r. A heap
// tableau requires
//   (a) finite support and no empty vectors,
//   (b) for q a proper prefix of r, T(q, a) exists and T(q, a) <= T(r, a),
//   (c) each V_r strictly increasing.
// Row a across all addresses is then a min-heap; its shape records |V_r|.

#ifndef HEAPABLE_TABLEAU_HPP
#define HEAPABLE_TABLEAU_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "address.hpp"

namespace heapable {

using Value = std::int64_t;

struct Cell {
    Address address;
    std::size_t row;  // 1-based position inside the vector

    auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(const Cell& c) {
    return "(" + c.address.display() + "," + std::to_string(c.row) + ")";
}

/// Failure tied to a specific cell, e.g. a pair outside the RS image.
class TableauError : public std::runtime_error {
public:
    TableauError(const std::string& what, std::optional<Cell> cell = std::nullopt)
        : std::runtime_error(cell ? what + " at " + to_string(*cell) : what),
          cell_(std::move(cell)) {}
    const std::optional<Cell>& cell() const noexcept { return cell_; }

private:
    std::optional<Cell> cell_;
};

inline void require_arity(std::size_t k) {
    if (k < 1 || k > kMaxArity)
        throw std::invalid_argument("arity must be in 1.." + std::to_string(kMaxArity));
}

// ---------------------------------------------------------------------------

class Shape {
public:
    explicit Shape(std::size_t k = 2) : k_(k) { require_arity(k); }
    Shape(std::size_t k, std::map<Address, std::size_t> lengths)
        : k_(k), lengths_(std::move(lengths)) {
        require_arity(k);
    }

    std::size_t arity() const noexcept { return k_; }
    const std::map<Address, std::size_t>& lengths() const noexcept { return lengths_; }
    std::map<Address, std::size_t>& lengths() noexcept { return lengths_; }

    std::size_t length(const Address& a) const {
        auto it = lengths_.find(a);
        return it == lengths_.end() ? 0 : it->second;
    }

    bool contains(const Cell& c) const { return c.row >= 1 && c.row <= length(c.address); }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& [a, len] : lengths_)
            n += len;
        return n;
    }

    /// All cells ordered by address, then row.
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (const auto& [a, len] : lengths_)
            for (std::size_t r = 1; r <= len; ++r)
                out.push_back(Cell{a, r});
        return out;
    }

    /// Empty when valid: positive lengths, digits below k, prefix-closed,
    /// and no vector longer than its parent's.
    std::string validate() const {
        for (const auto& [a, len] : lengths_) {
            for (char c : a.digits())
                if (c < '0' || static_cast<std::size_t>(c - '0') >= k_)
                    return "address " + a.display() + " outside arity";
            if (len == 0)
                return "empty vector at " + a.display();
            if (!a.is_root()) {
                const std::size_t up = length(a.parent());
                if (up == 0)
                    return "missing parent of " + a.display();
                if (up < len)
                    return "vector at " + a.display() + " longer than its parent";
            }
        }
        return {};
    }

    bool operator==(const Shape&) const = default;

private:
    std::size_t k_;
    std::map<Address, std::size_t> lengths_;
};

// ---------------------------------------------------------------------------

class HeapTableau {
public:
    using Vectors = std::map<Address, std::vector<Value>>;

    explicit HeapTableau(std::size_t k = 2) : k_(k) { require_arity(k); }
    /// Unchecked; use is_heap_tableau() to validate candidates.
    HeapTableau(std::size_t k, Vectors vectors) : k_(k), vectors_(std::move(vectors)) {
        require_arity(k);
    }

    std::size_t arity() const noexcept { return k_; }
    const Vectors& vectors() const noexcept { return vectors_; }
    Vectors& vectors() noexcept { return vectors_; }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& [a, v] : vectors_)
            n += v.size();
        return n;
    }
    bool empty() const { return size() == 0; }

    std::optional<Value> at(const Cell& c) const {
        auto it = vectors_.find(c.address);
        if (it == vectors_.end() || c.row < 1 || c.row > it->second.size())
            return std::nullopt;
        return it->second[c.row - 1];
    }

    std::optional<Cell> find(Value v) const {
        for (const auto& [a, vec] : vectors_)
            for (std::size_t i = 0; i < vec.size(); ++i)
                if (vec[i] == v)
                    return Cell{a, i + 1};
        return std::nullopt;
    }

    Shape shape() const {
        Shape s(k_);
        for (const auto& [a, vec] : vectors_)
            s.lengths().emplace(a, vec.size());
        return s;
    }

    bool operator==(const HeapTableau&) const = default;

private:
    std::size_t k_;
    Vectors vectors_;
};

inline Shape shape_of(const HeapTableau& t) { return t.shape(); }

// ---------------------------------------------------------------------------
// Validation

struct Violation {
    char condition;  // 'a' support/addresses, 'b' heap order, 'c' columns
    Cell cell;
    std::string message;
};

inline std::vector<Violation> heap_tableau_violations(const HeapTableau& t) {
    std::vector<Violation> out;
    const auto& vecs = t.vectors();
    for (const auto& [a, vec] : vecs) {
        bool digits_ok = true;
        for (char c : a.digits())
            if (c < '0' || static_cast<std::size_t>(c - '0') >= t.arity())
                digits_ok = false;
        if (!digits_ok)
            out.push_back({'a', Cell{a, 1}, "address digit outside arity"});
        if (vec.empty()) {
            out.push_back({'a', Cell{a, 1}, "empty vector"});
            continue;
        }
        for (std::size_t i = 1; i < vec.size(); ++i)
            if (!(vec[i - 1] < vec[i]))
                out.push_back({'c', Cell{a, i + 1}, "vector not strictly increasing"});
        if (a.is_root())
            continue;
        // Checking the parent is enough: the prefix relation is the
        // transitive closure of parent links.
        auto up = vecs.find(a.parent());
        for (std::size_t i = 0; i < vec.size(); ++i) {
            if (up == vecs.end() || i >= up->second.size())
                out.push_back({'b', Cell{a, i + 1}, "cell has no parent cell"});
            else if (vec[i] < up->second[i])
                out.push_back({'b', Cell{a, i + 1}, "cell smaller than its parent"});
        }
    }
    return out;
}

inline bool is_heap_tableau(const HeapTableau& t) { return heap_tableau_violations(t).empty(); }

/// Addresses x with x <=_lex y other than y itself: proper prefixes of y and
/// smaller siblings of every non-root prefix of y.
inline std::vector<Address> lex_predecessors(const Address& y) {
    std::vector<Address> out;
    Address prefix;
    for (char c : y.digits()) {
        out.push_back(prefix);
        for (char d = '0'; d < c; ++d)
            out.push_back(prefix.child(static_cast<std::size_t>(d - '0')));
        prefix = prefix.child(static_cast<std::size_t>(c - '0'));
    }
    return out;
}

/// Standard: heap tableau holding 1..n once each whose first-row labels
/// increase along the lexicographic partial order of addresses.
inline bool is_standard(const HeapTableau& t) {
    if (!is_heap_tableau(t))
        return false;
    const std::size_t n = t.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& [a, vec] : t.vectors())
        for (Value v : vec) {
            if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
                return false;
            seen[v] = true;
        }
    for (const auto& [y, vec] : t.vectors()) {
        for (const Address& x : lex_predecessors(y)) {
            auto it = t.vectors().find(x);
            if (it == t.vectors().end() || it->second.front() > vec.front())
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Insertion

struct BumpStep {
    Address address;
    Value inserted;
    Value displaced;
};

struct BumpTrace {
    std::vector<BumpStep> bumps;
    Cell final_cell;
    bool created = false;  // final value started a new vector
};

/// Column insertion of x: at the current set of sibling vectors (initially
/// just the root), append x to the first vector in digit order whose last
/// entry is below x, creating the first missing vector if reached. If none
/// accepts, x replaces the smallest entry above it among those vectors and
/// the displaced entry continues into the children of its vector.
inline BumpTrace insert_in_place(HeapTableau& t, Value x) {
    if (t.find(x))
        throw std::invalid_argument("value " + std::to_string(x) + " already in tableau");
    auto& vecs = t.vectors();
    BumpTrace trace;
    std::vector<Address> siblings{Address{}};
    Value current = x;
    for (;;) {
        for (const Address& a : siblings) {
            auto it = vecs.find(a);
            if (it == vecs.end()) {
                vecs.emplace(a, std::vector<Value>{current});
                trace.final_cell = Cell{a, 1};
                trace.created = true;
                return trace;
            }
            if (it->second.back() < current) {
                it->second.push_back(current);
                trace.final_cell = Cell{a, it->second.size()};
                return trace;
            }
        }
        std::optional<std::pair<Address, std::size_t>> best;
        Value best_value = 0;
        for (const Address& a : siblings) {
            const auto& vec = vecs.at(a);
            auto pos = std::upper_bound(vec.begin(), vec.end(), current);
            if (pos != vec.end() && (!best || *pos < best_value)) {
                best_value = *pos;
                best = {a, static_cast<std::size_t>(pos - vec.begin())};
            }
        }
        if (!best)
            throw std::logic_error("bump found no larger entry");
        vecs.at(best->first)[best->second] = current;
        trace.bumps.push_back(BumpStep{best->first, current, best_value});
        current = best_value;
        siblings.clear();
        for (std::size_t d = 0; d < t.arity(); ++d)
            siblings.push_back(best->first.child(d));
    }
}

inline std::pair<HeapTableau, BumpTrace> insert(HeapTableau t, Value x) {
    BumpTrace trace = insert_in_place(t, x);
    return {std::move(t), std::move(trace)};
}

/// Removes n from a standard tableau with n cells; the result is standard.
inline HeapTableau delete_max_standard(HeapTableau q) {
    if (!is_standard(q))
        throw std::invalid_argument("delete_max_standard requires a standard tableau");
    if (q.empty())
        throw std::invalid_argument("delete_max_standard on an empty tableau");
    const Value n = static_cast<Value>(q.size());
    const Cell c = *q.find(n);
    auto& vec = q.vectors().at(c.address);
    if (c.row != vec.size())
        throw TableauError("largest label is not last in its vector", c);
    vec.pop_back();
    if (vec.empty())
        q.vectors().erase(c.address);
    return q;
}

}  // namespace heapable

#endif  // HEAPABLE_TABLEAU_HPP
