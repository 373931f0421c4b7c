#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bbox/core/common.hpp"

namespace bbox::mst {

struct Edge {
    std::int32_t u = 0;
    std::int32_t v = 0;
    double w = 0.0;
};

// Weighted connected graph; the edge order defines the bit index, which is
// hidden from algorithms.
struct GraphInstance {
    std::int32_t n = 0;
    std::vector<Edge> edges;
    std::string id;

    std::int64_t m() const { return static_cast<std::int64_t>(edges.size()); }
    bool is_complete() const {
        return m() == static_cast<std::int64_t>(n) * (n - 1) / 2;
    }
    double max_weight() const {
        double w = 0.0;
        for (const auto& e : edges) w = std::max(w, e.w);
        return w;
    }
    bool has_duplicate_weights() const;
    bool is_distinct_perm() const; // weights are exactly {1, ..., m}
    bool connected() const;
};

struct DistinctUniform {};
struct UnitWeights {};
struct RandomReals {
    double lo = 0.5;
    double hi = 1.5;
};
using WeightMode = std::variant<DistinctUniform, UnitWeights, RandomReals>;

std::string to_string(const WeightMode& mode);

// Path on m+1 vertices, unit weights by default.
GraphInstance gen_path(std::int64_t m, const WeightMode& mode = UnitWeights{});

// K_n with a uniformly random spanning tree (via uniform Pruefer sequences) of
// weight-1 edges; every other edge has weight 2.
GraphInstance gen_complete_hidden_tree(std::int32_t n, std::uint64_t seed);

// Connected simple graph: a uniform random spanning tree plus m-(n-1) distinct
// random non-tree edges; weights per mode.
GraphInstance gen_random_connected(std::int32_t n, std::int64_t m, const WeightMode& mode,
                                   std::uint64_t seed);

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(std::int32_t n) : parent(static_cast<std::size_t>(n) + 1) {
        for (std::int32_t i = 0; i <= n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    std::int32_t find(std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    // returns true when the two sides were separate
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

struct KruskalResult {
    double weight = 0.0;
    std::vector<std::size_t> edge_indices; // one optimal spanning tree
};

// Ties broken by edge index; the returned weight is unique regardless.
KruskalResult kruskal(const GraphInstance& g);

// DIMACS-like text: header "p edge n m", lines "e u v w".
std::string to_dimacs(const GraphInstance& g);
GraphInstance from_dimacs(const std::string& text);

} // namespace bbox::mst
