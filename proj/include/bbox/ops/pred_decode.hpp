#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bbox/core/types.hpp"

namespace bbox::ops {

// Nodes whose predecessor chain reaches the source (node 1) without leaving
// the vector, looping, or cycling. Indexed by node label; entry 1 is true.
std::vector<bool> connected_mask(const PredVector& x);

// Decodes x as a single path from the source with every off-path node
// self-looping. Returns the node sequence (starting at 1) or nullopt.
std::optional<std::vector<std::int32_t>> path_from_source(const PredVector& x);

// Decodes x as a tree rooted at the source (connected nodes form the tree,
// all others self-loop). Returns parent-by-label (parent[1] = 0) or nullopt.
std::optional<std::vector<std::int32_t>> tree_from_source(const PredVector& x);

} // namespace bbox::ops
