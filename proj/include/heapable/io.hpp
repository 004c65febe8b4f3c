// Text and JSON formats shared by the command-line tool and tests.
// Requires nlohmann/json.

#ifndef HEAPABLE_IO_HPP
#define HEAPABLE_IO_HPP

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "greedy.hpp"
#include "hooks.hpp"
#include "rs.hpp"
#include "tableau.hpp"

namespace heapable::io {

using nlohmann::json;

/// Whitespace-separated numbers. Throws std::invalid_argument on any token
/// that is not entirely a number of type T.
template <class T>
std::vector<T> parse_numbers(const std::string& text) {
    std::vector<T> out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        T value{};
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (*first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw std::invalid_argument("not a number: '" + token + "'");
        if constexpr (std::is_floating_point_v<T>) {
            if (!std::isfinite(value))
                throw std::invalid_argument("not a finite number: '" + token + "'");
        }
        out.push_back(value);
    }
    return out;
}

template <class T>
std::string join(const std::vector<T>& values, const char* sep = " ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out << sep;
        out << values[i];
    }
    return out.str();
}

// ---------------------------------------------------------------------------

template <class T>
json to_json(const MhsResult<T>& r) {
    json assignment = json::array();
    for (const Placement& p : r.assignment) {
        // Node ids coincide with element indices: nodes are created in input order.
        assignment.push_back({{"index", p.index},
                              {"heap", p.heap},
                              {"parent", p.parent ? json(*p.parent) : json(nullptr)}});
    }
    return {{"k", r.k}, {"count", r.count}, {"assignment", assignment}};
}

inline json to_json(const HeapTableau& t) {
    json vectors = json::object();
    for (const auto& [a, vec] : t.vectors())
        vectors[a.digits()] = vec;
    return {{"k", t.arity()}, {"vectors", vectors}};
}

inline json to_json(const Shape& s) {
    json lengths = json::object();
    for (const auto& [a, len] : s.lengths())
        lengths[a.digits()] = len;
    return {{"k", s.arity()}, {"lengths", lengths}};
}

inline json to_json(const TableauPair& pq) { return {{"P", to_json(pq.p)}, {"Q", to_json(pq.q)}}; }

inline json cell_json(const Cell& c) { return json::array({c.address.digits(), c.row}); }

inline json to_json(const HookTable& table) {
    json out = json::array();
    for (const auto& [cell, h] : table)
        out.push_back({{"cell", cell_json(cell)}, {"hook", h}});
    return out;
}

inline std::string fraction(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::size_t read_arity(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_unsigned())
        throw std::invalid_argument("expected an object with unsigned field \"k\"");
    return j["k"].get<std::size_t>();
}

}  // namespace detail

/// Accepts {"k":..,"vectors":{address:[values]}}. The result is not
/// validated as a heap tableau.
inline HeapTableau tableau_from_json(const json& j) {
    const std::size_t k = detail::read_arity(j);
    if (!j.contains("vectors") || !j["vectors"].is_object())
        throw std::invalid_argument("tableau JSON needs an object \"vectors\"");
    HeapTableau t(k);
    for (const auto& [key, val] : j["vectors"].items()) {
        if (!val.is_array())
            throw std::invalid_argument("vector at '" + key + "' is not an array");
        std::vector<Value> vec;
        for (const auto& x : val) {
            if (!x.is_number_integer())
                throw std::invalid_argument("vector at '" + key + "' holds a non-integer");
            vec.push_back(x.get<Value>());
        }
        t.vectors().emplace(Address::parse(key, k), std::move(vec));
    }
    return t;
}

/// Accepts a shape object ({"lengths":..}) or a tableau object, whose
/// shape is taken. Throws if the shape is invalid.
inline Shape shape_from_json(const json& j) {
    Shape s(detail::read_arity(j));
    if (j.contains("lengths")) {
        if (!j["lengths"].is_object())
            throw std::invalid_argument("\"lengths\" must be an object");
        for (const auto& [key, val] : j["lengths"].items()) {
            if (!val.is_number_unsigned())
                throw std::invalid_argument("length at '" + key + "' is not unsigned");
            s.lengths().emplace(Address::parse(key, s.arity()), val.get<std::size_t>());
        }
    } else if (j.contains("vectors")) {
        s = tableau_from_json(j).shape();
    } else {
        throw std::invalid_argument("shape JSON needs \"lengths\" or \"vectors\"");
    }
    if (auto why = s.validate(); !why.empty())
        throw std::invalid_argument("invalid shape: " + why);
    return s;
}

inline TableauPair pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
        throw std::invalid_argument("expected an object with \"P\" and \"Q\"");
    return TableauPair{tableau_from_json(j["P"]), tableau_from_json(j["Q"])};
}

}  // namespace heapable::io

#endif  // HEAPABLE_IO_HPP
