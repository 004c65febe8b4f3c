// Node addresses in a k-ary tree: strings of digits '0'..'k-1', the empty
// string being the root.

#ifndef HEAPABLE_ADDRESS_HPP
#define HEAPABLE_ADDRESS_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heapable {

/// Digit addresses are single characters, which caps the arity.
inline constexpr std::size_t kMaxArity = 10;

class Address {
public:
    Address() = default;

    /// Throws std::invalid_argument unless every character is a digit < k.
    static Address parse(std::string_view digits, std::size_t k) {
        if (k < 1 || k > kMaxArity)
            throw std::invalid_argument("arity must be in 1.." + std::to_string(kMaxArity));
        for (char c : digits)
            if (c < '0' || static_cast<std::size_t>(c - '0') >= k)
                throw std::invalid_argument("address '" + std::string(digits) +
                                            "' has a digit outside the arity");
        Address a;
        a.digits_ = digits;
        return a;
    }

    const std::string& digits() const noexcept { return digits_; }
    std::size_t depth() const noexcept { return digits_.size(); }
    bool is_root() const noexcept { return digits_.empty(); }
    std::size_t last_digit() const { return static_cast<std::size_t>(digits_.back() - '0'); }

    Address parent() const {
        if (is_root())
            throw std::logic_error("root address has no parent");
        Address a;
        a.digits_ = digits_.substr(0, digits_.size() - 1);
        return a;
    }

    Address child(std::size_t digit) const {
        Address a;
        a.digits_ = digits_ + static_cast<char>('0' + digit);
        return a;
    }

    /// Non-strict prefix relation.
    bool is_prefix_of(const Address& other) const noexcept {
        return other.digits_.compare(0, digits_.size(), digits_) == 0 &&
               digits_.size() <= other.digits_.size();
    }

    bool is_proper_prefix_of(const Address& other) const noexcept {
        return digits_.size() < other.digits_.size() && is_prefix_of(other);
    }

    /// "λ" for the root, the digit string otherwise.
    std::string display() const { return is_root() ? "λ" : digits_; }

    auto operator<=>(const Address&) const = default;

private:
    std::string digits_;
};

/// Lexicographic partial order: x <= y iff x is a prefix of y, or
/// x = z a and y = z b w with digit a < b. Siblings' subtrees are
/// ordered only through their roots, so e.g. "01" and "1" are incomparable.
inline bool lex_leq(const Address& x, const Address& y) {
    if (x.is_prefix_of(y))
        return true;
    if (x.is_root() || y.depth() < x.depth())
        return false;
    const std::string& xs = x.digits();
    const std::string& ys = y.digits();
    const std::size_t last = xs.size() - 1;
    return xs.compare(0, last, ys, 0, last) == 0 && xs[last] < ys[last];
}

}  // namespace heapable

#endif  // HEAPABLE_ADDRESS_HPP
