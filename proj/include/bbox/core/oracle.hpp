#pragma once

#include <cstddef>

#include "bbox/core/objective.hpp"
#include "bbox/core/types.hpp"

namespace bbox {

// A problem oracle. Immutable after construction, shareable across runs.
class Oracle {
public:
    virtual ~Oracle() = default;
    virtual Objective evaluate(const Point& p) const = 0;
    virtual Domain domain() const = 0;
    virtual std::size_t dimension() const = 0;
};

} // namespace bbox
