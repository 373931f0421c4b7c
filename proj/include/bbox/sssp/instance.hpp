#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bbox/core/types.hpp"
#include "bbox/mst/graph.hpp"

namespace bbox::sssp {

// SSSP instance: node 1 is the source; C is the penalty distance for
// unreachable nodes in the single-criterion objective (n * w_max).
struct SSSPInstance {
    mst::GraphInstance graph;
    double big_c = 0.0;

    static SSSPInstance wrap(mst::GraphInstance g) {
        SSSPInstance inst;
        inst.big_c = static_cast<double>(g.n) * g.max_weight();
        inst.graph = std::move(g);
        return inst;
    }

    std::int32_t n() const { return graph.n; }
};

struct DijkstraResult {
    std::vector<double> dist;          // 1-indexed, dist[1] = 0
    std::vector<std::int32_t> parent;  // 1-indexed, parent[1] = 0
    std::int32_t height = 0;           // smallest height of a shortest path tree
    double dist_sum = 0.0;             // matches the single-criterion optimum
};

// Deterministic tie-breaking by smaller node label. dist_sum accumulates the
// per-node distances in label order, matching the oracle's summation.
DijkstraResult dijkstra_ref(const SSSPInstance& inst);

// The shortest-path tree as a predecessor vector.
PredVector spt_point(const DijkstraResult& d, std::int32_t n);

// Optimal multi-criteria tuple (the exact distance vector).
std::vector<double> optimal_tuple(const DijkstraResult& d, std::int32_t n);

// K_n as a union of floor((n+1)/2) spanning trees, each returned as a
// parent-by-label array rooted at node 1.
std::vector<std::vector<std::int32_t>> decompose_Kn(std::int32_t n);

// Uniformly random Hamiltonian path from the source, unit weights. With
// `complete`, the non-path edges exist with weight n (the single-criterion /
// complete-graph harness); otherwise only the path edges exist.
SSSPInstance gen_hidden_path(std::int32_t n, std::uint64_t seed, bool complete = false);

// K_n where each node i > 1 picks a uniform predecessor among smaller labels;
// that edge has weight 1, every other edge weight n.
SSSPInstance gen_complete_cheap_pred(std::int32_t n, std::uint64_t seed);

// Random connected instance via the MST-module generator.
SSSPInstance gen_random_connected(std::int32_t n, std::int64_t m, const mst::WeightMode& mode,
                                  std::uint64_t seed);

// DIMACS-like text with "c source 1" and "c bigC <value>" comment headers.
std::string to_dimacs(const SSSPInstance& inst);
SSSPInstance sssp_from_dimacs(const std::string& text);

} // namespace bbox::sssp
