#pragma once

#include <cstdint>
#include <memory>

#include "bbox/core/variation.hpp"
#include "bbox/ops/tree_shape.hpp"

namespace bbox::ops {

// (2, 3, ..., n): every node except the source points to itself. 0-ary.
VariationOp self_loops(std::int32_t n);

// Exactly one uniformly chosen node points to the source, the rest self-loop.
// 0-ary, structure-preserving unbiased.
VariationOp one_to_source(std::int32_t n);

// Parent encodes a path from the source; redirect one uniformly chosen
// non-path node to the path's endpoint. Unary.
VariationOp extend_path();

// Redirect one uniformly chosen unconnected node to a uniformly chosen
// connected node (the source counts as connected). Unary; drives the
// tree-growing structure-preserving algorithms.
VariationOp extend_tree();

// Canonical-traversal attach: redirect one uniformly chosen unconnected node
// to the active node of the partial tree under `target`'s canonical
// depth-first order. Unary.
VariationOp attach(std::shared_ptr<const TreeShape> target);

// Resample one uniformly chosen position to a uniformly chosen different
// image. Unary, redirecting unbiased.
VariationOp redirect_one();

// All nodes point to one uniformly chosen non-source node (which self-loops).
// 0-ary, structure-preserving unbiased; used to learn C.
VariationOp all_to_one(std::int32_t n);

// All entries equal one uniformly chosen node of [n]. The paper's redirecting
// C-learning query; not invariant under Definition 12, kept outside the
// redirecting verifier panel.
VariationOp all_to_same(std::int32_t n);

// Uniform over [n]^{n-1}. 0-ary, redirecting unbiased.
VariationOp uniform_pred(std::int32_t n);

// Returns `a` when a and b agree on exactly k non-self-loop entries, and the
// all-self-loops point otherwise. Binary; one query decides the predicate.
VariationOp coincide_probe(std::int64_t k);

// Returns `a` when the endpoint of b's path is connected in a, the
// all-self-loops point otherwise. Binary; used for candidate freshness.
VariationOp endpoint_connected_probe();

// out_i = delta_new_i where delta_new and delta_ref differ, base_i elsewhere.
// 3-ary; grafts a verified attachment onto a grown tree.
VariationOp pred_merge();

// Redirect a uniformly chosen node that is unconnected in `cur` and unmarked
// in `marks` to the unique node where cur and prev differ. 3-ary.
VariationOp attach_unmarked();

// Same, but the target is the source. Binary.
VariationOp attach_to_source_unmarked();

// Deliberately biased control: always redirects node 2 to node 1.
VariationOp redirect_2_to_1();

} // namespace bbox::ops
