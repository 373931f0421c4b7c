#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bbox/core/common.hpp"

namespace bbox {

// ---------------------------------------------------------------------------
// BitString: MST search point, inclusion vector over m edges.
// ---------------------------------------------------------------------------

struct BitString {
    std::vector<std::uint8_t> bits;

    BitString() = default;
    explicit BitString(std::size_t m, std::uint8_t fill = 0) : bits(m, fill) {}

    std::size_t size() const { return bits.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits[i]; }
    std::uint8_t& operator[](std::size_t i) { return bits[i]; }

    std::size_t ones() const {
        std::size_t c = 0;
        for (auto b : bits) c += b;
        return c;
    }

    bool operator==(const BitString&) const = default;
};

inline std::size_t hamming(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw LengthMismatch("hamming: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

inline std::string to_string(const BitString& x) {
    std::string s;
    s.reserve(x.size());
    for (auto b : x.bits) s.push_back(b ? '1' : '0');
    return s;
}

// ---------------------------------------------------------------------------
// PredVector: SSSP search point. Entry for node v (v in 2..n) is a node label
// in [1..n]; entry == v means the node points to itself (detached). Node 1 is
// the source and has no entry.
// ---------------------------------------------------------------------------

struct PredVector {
    std::vector<std::int32_t> pred; // pred[i] belongs to node i+2
    std::int32_t n = 0;

    PredVector() = default;
    explicit PredVector(std::int32_t n_) : pred(static_cast<std::size_t>(n_ - 1)), n(n_) {
        for (std::int32_t v = 2; v <= n; ++v) set(v, v);
    }

    std::int32_t get(std::int32_t node) const { return pred[static_cast<std::size_t>(node - 2)]; }
    void set(std::int32_t node, std::int32_t to) { pred[static_cast<std::size_t>(node - 2)] = to; }

    bool self_loop(std::int32_t node) const { return get(node) == node; }
    std::size_t size() const { return pred.size(); }

    bool operator==(const PredVector&) const = default;
};

inline std::string to_string(const PredVector& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.pred.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(x.pred[i]);
    }
    s.push_back(')');
    return s;
}

// ---------------------------------------------------------------------------
// Point
// ---------------------------------------------------------------------------

using Point = std::variant<BitString, PredVector>;

inline Domain domain_of(const Point& p) {
    return std::holds_alternative<BitString>(p) ? Domain::BitString : Domain::PredVector;
}

inline std::size_t dimension_of(const Point& p) {
    if (const auto* b = std::get_if<BitString>(&p)) return b->size();
    return std::get<PredVector>(p).size();
}

inline std::string to_string(const Point& p) {
    if (const auto* b = std::get_if<BitString>(&p)) return to_string(*b);
    return to_string(std::get<PredVector>(p));
}

} // namespace bbox
