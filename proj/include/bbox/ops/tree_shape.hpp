#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bbox/core/types.hpp"

namespace bbox::ops {

// Rooted tree on ids 0..K-1 (id 0 is the root) with a canonical depth-first
// traversal: children are visited in descending lengths-sequence order (the
// ordered leaf-path-length profile, longest first), ties broken by subtree
// size and then by a canonical subtree encoding. The traversal determines,
// for every prefix, which node receives the next child; that node is a fixed
// point of every automorphism of the prefix, which is what makes the attach
// operator structure-preserving unbiased.
class TreeShape {
public:
    explicit TreeShape(std::vector<int> parent);

    int size() const { return static_cast<int>(parent_.size()); }
    const std::vector<int>& preorder() const { return preorder_; }
    int parent_of(int id) const { return parent_[static_cast<std::size_t>(id)]; }
    int depth_of(int id) const { return depth_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& lengths_sequence(int id) const {
        return lengths_[static_cast<std::size_t>(id)];
    }

    // Label (node id in 1..n) of the active node when a partial labeled tree
    // with s nodes (parent-by-label over 1..n, parent[1] = 0, -1 = absent) is
    // the canonical s-prefix of this shape. Returns 0 when the partial tree
    // does not match or the shape is already complete.
    int active_label(const std::vector<std::int32_t>& parent_by_label, int s) const;

private:
    std::string prefix_code(int id, int s, std::vector<int>& order_out) const;

    std::vector<int> parent_;
    std::vector<std::vector<int>> children_; // canonical order
    std::vector<int> preorder_;
    std::vector<int> depth_;
    std::vector<int> rank_in_preorder_;
    std::vector<std::vector<int>> lengths_;
};

// Lengths sequence of the subtree of v in a tree given by parent-by-label
// (parent[1] = 0; -1 marks absent labels): path lengths from v to each leaf
// of its subtree, largest first.
std::vector<int> lengths_sequence_of(const std::vector<std::int32_t>& parent_by_label,
                                     std::int32_t v);

} // namespace bbox::ops
