// Hook lengths of heap tableau shapes and the filling-count lower bound
// n! / prod H. Counts and bounds are exact (arbitrary precision).
//
// The hook of cell (a, i) is every cell (b, i) with a a prefix of b, plus
// every cell (a, j) with j >= i; H(a, i) is its size.

#ifndef HEAPABLE_HOOKS_HPP
#define HEAPABLE_HOOKS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "random.hpp"
#include "tableau.hpp"

namespace heapable {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using HookTable = std::map<Cell, std::size_t>;

namespace detail {

inline void require_valid(const Shape& shape) {
    if (auto why = shape.validate(); !why.empty())
        throw std::invalid_argument("invalid shape: " + why);
}

/// Addresses having `a` as a (non-strict) prefix; contiguous in string order.
template <class F>
void for_each_descendant(const Shape& shape, const Address& a, F&& f) {
    const auto& lengths = shape.lengths();
    for (auto it = lengths.lower_bound(a); it != lengths.end() && a.is_prefix_of(it->first); ++it)
        f(it->first, it->second);
}

}  // namespace detail

inline std::size_t hook_length(const Shape& shape, const Cell& c) {
    std::size_t heap = 0;
    detail::for_each_descendant(shape, c.address, [&](const Address&, std::size_t len) {
        heap += len >= c.row;
    });
    const std::size_t vec = shape.length(c.address) - c.row + 1;
    return heap + vec - 1;
}

inline HookTable hook_lengths(const Shape& shape) {
    detail::require_valid(shape);
    HookTable table;
    for (const Cell& c : shape.cells())
        table.emplace(c, hook_length(shape, c));
    return table;
}

/// Cells whose removal leaves a valid shape: last in their vector, with no
/// child vector reaching the same row.
inline std::vector<Cell> corners(const Shape& shape) {
    detail::require_valid(shape);
    std::vector<Cell> out;
    for (const auto& [a, len] : shape.lengths()) {
        bool blocked = false;
        for (std::size_t d = 0; d < shape.arity(); ++d)
            blocked = blocked || shape.length(a.child(d)) >= len;
        if (!blocked)
            out.push_back(Cell{a, len});
    }
    return out;
}

inline BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// n! / prod of hook lengths, in lowest terms. The empty shape gives 1.
inline Rational hook_bound(const Shape& shape) {
    BigInt denom = 1;
    for (const auto& [cell, h] : hook_lengths(shape))
        denom *= h;
    return Rational(factorial(shape.size()), denom);
}

struct FillingCount {
    BigInt exact;
    Rational bound;
};

inline constexpr std::size_t kFillingDefaultCap = 16;

/// Number of labelings of the shape by 1..n satisfying heap order and
/// increasing vectors, i.e. linear extensions of the cell poset, counted by
/// memoized search over order ideals.
inline FillingCount count_fillings(const Shape& shape, std::size_t cap = kFillingDefaultCap) {
    detail::require_valid(shape);
    const std::size_t n = shape.size();
    if (n > cap)
        throw std::length_error("count_fillings: shape has " + std::to_string(n) +
                                " cells, cap is " + std::to_string(cap));
    if (n > 63)
        throw std::length_error("count_fillings supports at most 63 cells");

    const std::vector<Cell> cells = shape.cells();
    std::map<Cell, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i)
        index.emplace(cells[i], i);
    std::vector<std::uint64_t> below(n, 0);  // cells that must be labelled first
    for (std::size_t i = 0; i < n; ++i) {
        const Cell& c = cells[i];
        if (c.row > 1)
            below[i] |= std::uint64_t{1} << index.at(Cell{c.address, c.row - 1});
        if (!c.address.is_root())
            below[i] |= std::uint64_t{1} << index.at(Cell{c.address.parent(), c.row});
    }

    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::unordered_map<std::uint64_t, BigInt> memo;
    auto count = [&](auto&& self, std::uint64_t done) -> BigInt {
        if (done == full)
            return 1;
        if (auto it = memo.find(done); it != memo.end())
            return it->second;
        BigInt total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (!(done & bit) && (below[i] & ~done) == 0)
                total += self(self, done | bit);
        }
        memo.emplace(done, total);
        return total;
    };
    return FillingCount{count(count, 0), hook_bound(shape)};
}

/// Cells of the hook of c other than c itself.
inline std::vector<Cell> hook_cells_excluding(const Shape& shape, const Cell& c) {
    std::vector<Cell> out;
    detail::for_each_descendant(shape, c.address, [&](const Address& b, std::size_t len) {
        if (b != c.address && len >= c.row)
            out.push_back(Cell{b, c.row});
    });
    for (std::size_t j = c.row + 1; j <= shape.length(c.address); ++j)
        out.push_back(Cell{c.address, j});
    return out;
}

/// Random walk from a uniform cell, jumping uniformly within the current
/// hook until a cell with hook length 1 is reached.
inline Cell hook_walk(const Shape& shape, Engine& eng) {
    detail::require_valid(shape);
    const std::vector<Cell> cells = shape.cells();
    if (cells.empty())
        throw std::invalid_argument("hook_walk on an empty shape");
    Cell at = cells[uniform_below(eng, cells.size())];
    for (;;) {
        const auto options = hook_cells_excluding(shape, at);
        if (options.empty())
            return at;
        at = options[uniform_below(eng, options.size())];
    }
}

inline Cell hook_walk(const Shape& shape, std::uint64_t seed) {
    Engine eng = trial_engine(seed, 0);
    return hook_walk(shape, eng);
}

/// Grows a shape of n cells by adding a uniformly chosen addable cell n
/// times. Not uniform over shapes.
inline Shape random_shape(std::size_t n, std::size_t k, Engine& eng) {
    require_arity(k);
    Shape shape(k);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<Address> addable;
        if (shape.lengths().empty())
            addable.push_back(Address{});
        for (const auto& [a, len] : shape.lengths()) {
            if (a.is_root() || shape.length(a.parent()) > len)
                addable.push_back(a);
            for (std::size_t d = 0; d < k; ++d)
                if (shape.length(a.child(d)) == 0)
                    addable.push_back(a.child(d));
        }
        ++shape.lengths()[addable[uniform_below(eng, addable.size())]];
    }
    return shape;
}

// ---------------------------------------------------------------------------
// Families

namespace detail {

/// 1 + k + ... + k^{l-1}
inline BigInt geometric_sum(std::size_t k, std::size_t l) {
    BigInt s = 0, p = 1;
    for (std::size_t i = 0; i < l; ++i) {
        s += p;
        p *= k;
    }
    return s;
}

}  // namespace detail

struct FamilyShape {
    Shape shape;
    BigInt closed_form;  // number of fillings
};

/// Root vector of length k over a complete k-ary tree of depth r whose other
/// nodes hold single cells; n = (1 + k + ... + k^{r-1}) + k - 1. The hook
/// bound is exact here and equals
/// (n-1)! / ((k-1)! * prod_{i=1}^{r-1} S(r-i)^{k^i}),  S(l) = 1 + ... + k^{l-1}.
inline FamilyShape gen_T_rk(std::size_t r, std::size_t k) {
    if (r < 2)
        throw std::invalid_argument("gen_T_rk requires r >= 2");
    require_arity(k);
    const BigInt tree = detail::geometric_sum(k, r);
    if (tree > 100000)
        throw std::out_of_range("gen_T_rk: shape too large");
    Shape shape(k);
    std::vector<Address> level{Address{}};
    shape.lengths().emplace(Address{}, k);
    for (std::size_t depth = 1; depth < r; ++depth) {
        std::vector<Address> next;
        for (const Address& a : level)
            for (std::size_t d = 0; d < k; ++d) {
                next.push_back(a.child(d));
                shape.lengths().emplace(next.back(), 1);
            }
        level = std::move(next);
    }
    const std::size_t n = shape.size();
    BigInt denom = factorial(k - 1);
    BigInt width = 1;  // k^i
    for (std::size_t i = 1; i < r; ++i) {
        width *= k;
        const BigInt s = detail::geometric_sum(k, r - i);
        denom *= boost::multiprecision::pow(s, static_cast<unsigned>(width));
    }
    const BigInt num = factorial(n - 1);
    if (num % denom != 0)
        throw std::logic_error("gen_T_rk closed form is not an integer");
    return FamilyShape{std::move(shape), num / denom};
}

/// Two heaps: the first with cells at λ, 0, 1, 11, ..., 1^{2r-3}, the second
/// at λ and 0; n = 2r + 1. For even r the hook bound is not an integer.
inline Shape gen_W_r(std::size_t r) {
    if (r < 2)
        throw std::invalid_argument("gen_W_r requires r >= 2");
    if (r > 5000)
        throw std::out_of_range("gen_W_r: r too large");
    Shape shape(2);
    shape.lengths().emplace(Address{}, 2);
    shape.lengths().emplace(Address::parse("0", 2), 2);
    Address a;
    for (std::size_t i = 0; i < 2 * r - 3; ++i) {
        a = a.child(1);
        shape.lengths().emplace(a, 1);
    }
    return shape;
}

/// Both sides of H(a1,i1) - 1 >= (H(a1,ir) - 1) + (H(am,i1) - 1) for a cell
/// (a1,i1) and a cell (am,ir) with a1 a proper prefix of am and i1 < ir.
/// The inequality is meant for a corner (am,ir); arity-1 shapes then give
/// equality.
struct HookSplit {
    std::size_t lhs;
    std::size_t rhs;
};

inline HookSplit hook_split(const Shape& shape, const Cell& start, const Cell& end) {
    if (!start.address.is_proper_prefix_of(end.address) || !(start.row < end.row))
        throw std::invalid_argument("hook_split needs a proper prefix and a later row");
    const Cell corner_row{start.address, end.row};
    const Cell corner_col{end.address, start.row};
    for (const Cell& c : {start, end, corner_row, corner_col})
        if (!shape.contains(c))
            throw std::invalid_argument("hook_split cell " + to_string(c) + " not in shape");
    return HookSplit{hook_length(shape, start) - 1,
                     (hook_length(shape, corner_row) - 1) + (hook_length(shape, corner_col) - 1)};
}

/// Sum over corners c of F(shape - c) / F(shape) with F = n!/prod H. The
/// walk argument shows it is at least 1, which gives the lower bound by
/// induction.
inline Rational corner_ratio_sum(const Shape& shape) {
    const Rational whole = hook_bound(shape);
    Rational sum = 0;
    for (const Cell& c : corners(shape)) {
        Shape smaller = shape;
        auto& len = smaller.lengths().at(c.address);
        if (--len == 0)
            smaller.lengths().erase(c.address);
        sum += hook_bound(smaller) / whole;
    }
    return sum;
}

}  // namespace heapable

#endif  // HEAPABLE_HOOKS_HPP
