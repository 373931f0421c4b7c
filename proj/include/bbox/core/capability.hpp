#pragma once

#include <cstdint>
#include <string>

#include "bbox/core/common.hpp"

namespace bbox {

// Arity STAR means unbounded.
constexpr int STAR = -1;

enum class CapabilityKind {
    Unrestricted,
    RankingUnrestricted,
    Unbiased,
    RankingUnbiased,
};

struct Capability {
    CapabilityKind kind = CapabilityKind::Unrestricted;
    int arity = STAR; // meaningful for the unbiased kinds

    static Capability unrestricted() { return {CapabilityKind::Unrestricted, STAR}; }
    static Capability ranking_unrestricted() { return {CapabilityKind::RankingUnrestricted, STAR}; }
    static Capability unbiased(int k) { return {CapabilityKind::Unbiased, k}; }
    static Capability ranking_unbiased(int k) { return {CapabilityKind::RankingUnbiased, k}; }

    bool is_unbiased() const {
        return kind == CapabilityKind::Unbiased || kind == CapabilityKind::RankingUnbiased;
    }
    bool is_ranking() const {
        return kind == CapabilityKind::RankingUnrestricted || kind == CapabilityKind::RankingUnbiased;
    }

    bool arity_allows(int k) const {
        if (!is_unbiased()) return true;
        return arity == STAR || k <= arity;
    }

    bool operator==(const Capability&) const = default;
};

// Partial order: an algorithm declaring `need` may run in a session granting
// `have`. Information access must not grow (ranking-only algorithms run fine
// where raw values are available) and operator arity must be covered.
inline bool subsumes(const Capability& have, const Capability& need) {
    auto arity_ok = [&] {
        if (!need.is_unbiased()) return true;
        if (!have.is_unbiased()) return true; // unrestricted sessions allow any operator
        if (have.arity == STAR) return true;
        return need.arity != STAR && need.arity <= have.arity;
    };
    switch (need.kind) {
        case CapabilityKind::Unrestricted:
            return have.kind == CapabilityKind::Unrestricted;
        case CapabilityKind::RankingUnrestricted:
            return have.kind == CapabilityKind::Unrestricted ||
                   have.kind == CapabilityKind::RankingUnrestricted;
        case CapabilityKind::Unbiased:
            return (have.kind == CapabilityKind::Unrestricted ||
                    have.kind == CapabilityKind::Unbiased) &&
                   arity_ok();
        case CapabilityKind::RankingUnbiased:
            // every kind grants at least rank information and operator access
            return arity_ok();
    }
    return false;
}

inline std::string to_string(const Capability& c) {
    switch (c.kind) {
        case CapabilityKind::Unrestricted: return "unrestricted";
        case CapabilityKind::RankingUnrestricted: return "rb-unrestricted";
        case CapabilityKind::Unbiased:
            return c.arity == STAR ? "unbiased-*" : "unbiased-" + std::to_string(c.arity);
        case CapabilityKind::RankingUnbiased:
            return c.arity == STAR ? "rb-unbiased-*" : "rb-unbiased-" + std::to_string(c.arity);
    }
    return "?";
}

} // namespace bbox
