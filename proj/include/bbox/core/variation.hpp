#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "bbox/core/common.hpp"
#include "bbox/core/types.hpp"

namespace bbox {

// Diagnostic channel for operators whose precondition failed: they return the
// first parent unchanged (still unbiased, mirrors the rls_k "it outputs x"
// convention) and raise this flag, which the session picks up per apply().
namespace detail {
inline thread_local bool malformed_parent = false;
}

inline void flag_malformed_parent() { detail::malformed_parent = true; }

inline bool take_malformed_parent_flag() {
    bool v = detail::malformed_parent;
    detail::malformed_parent = false;
    return v;
}

// A k-ary variation operator. The sampler sees exactly its declared parents
// plus randomness; arity 0 means sampling without parents.
struct VariationOp {
    std::string name;
    int arity = 0;
    Domain domain = Domain::BitString;
    std::function<Point(std::span<const Point>, RngStream&)> sample;

    Point operator()(std::span<const Point> parents, RngStream& rng) const {
        return sample(parents, rng);
    }
};

} // namespace bbox
