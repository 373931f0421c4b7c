#pragma once

#include "bbox/core/session.hpp"

namespace bbox {

// Capability-adaptive comparison helpers: ranking sessions compare current
// ranks, value sessions compare raw objectives. Ranks preserve the value
// order among queried points, so either route decides the same predicate.

inline bool weight_less(const Session& s, Handle a, Handle b) {
    if (s.capability().is_ranking()) return s.ranks(a).second < s.ranks(b).second;
    return std::get<BiCriteria>(s.value(a)).weight < std::get<BiCriteria>(s.value(b)).weight;
}

inline bool comps_less(const Session& s, Handle a, Handle b) {
    if (s.capability().is_ranking()) return s.ranks(a).first < s.ranks(b).first;
    return std::get<BiCriteria>(s.value(a)).components < std::get<BiCriteria>(s.value(b)).components;
}

inline bool scalar_less(const Session& s, Handle a, Handle b) {
    if (s.capability().is_ranking()) return s.ranks(a).first < s.ranks(b).first;
    return std::get<Scalar>(s.value(a)).value < std::get<Scalar>(s.value(b)).value;
}

// Equality of objective views; exact because distinct values map to distinct
// ranks and identical points evaluate to identical doubles.
inline bool same_objective(const Session& s, Handle a, Handle b) {
    if (s.capability().is_ranking()) {
        Ranks ra = s.ranks(a), rb = s.ranks(b);
        return ra.first == rb.first && ra.second == rb.second;
    }
    return approx_equal(s.value(a), s.value(b), 1e-12);
}

} // namespace bbox
