#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "bbox/core/common.hpp"

namespace bbox {

constexpr double INF = std::numeric_limits<double>::infinity();

// Bi-criteria MST value: (number of connected components, total selected weight).
struct BiCriteria {
    std::int32_t components = 0;
    double weight = 0.0;
    bool operator==(const BiCriteria&) const = default;
};

// Multi-criteria SSSP value: one distance per non-source node, INF allowed.
struct DistTuple {
    std::vector<double> d;
    bool operator==(const DistTuple&) const = default;
};

// Single-criterion SSSP value.
struct Scalar {
    double value = 0.0;
    bool operator==(const Scalar&) const = default;
};

using Objective = std::variant<BiCriteria, DistTuple, Scalar>;

inline bool close(double a, double b, double eps = 1e-9) {
    if (a == b) return true; // covers INF == INF
    if (std::isinf(a) || std::isinf(b)) return false;
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= eps * scale;
}

inline bool approx_equal(const Objective& x, const Objective& y, double eps = 1e-9) {
    if (x.index() != y.index()) return false;
    if (const auto* a = std::get_if<BiCriteria>(&x)) {
        const auto& b = std::get<BiCriteria>(y);
        return a->components == b.components && close(a->weight, b.weight, eps);
    }
    if (const auto* a = std::get_if<DistTuple>(&x)) {
        const auto& b = std::get<DistTuple>(y);
        if (a->d.size() != b.d.size()) return false;
        for (std::size_t i = 0; i < a->d.size(); ++i)
            if (!close(a->d[i], b.d[i], eps)) return false;
        return true;
    }
    return close(std::get<Scalar>(x).value, std::get<Scalar>(y).value, eps);
}

// INF is serialized as the literal string "INF".
inline std::string serialize_value(double v) {
    if (std::isinf(v)) return "INF";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline std::string to_string(const Objective& o) {
    if (const auto* a = std::get_if<BiCriteria>(&o))
        return "(" + std::to_string(a->components) + "," + serialize_value(a->weight) + ")";
    if (const auto* a = std::get_if<DistTuple>(&o)) {
        std::string s = "(";
        for (std::size_t i = 0; i < a->d.size(); ++i) {
            if (i) s.push_back(',');
            s += serialize_value(a->d[i]);
        }
        return s + ")";
    }
    return serialize_value(std::get<Scalar>(o).value);
}

} // namespace bbox
