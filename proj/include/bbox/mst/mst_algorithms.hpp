#pragma once

#include "bbox/core/run.hpp"

namespace bbox::mst {

// Kruskal in the black box: empty-graph reference, unit-vector weight
// learning, then inclusion tests in weight order. Exactly 1 + m + t queries.
AlgorithmSpec alg_mst_unrestricted();

// Unary unbiased Kruskal; requires distinct weights.
AlgorithmSpec alg_mst_unary();

// Ranking-based unary unbiased Kruskal; also the duplicate-weight fallback.
AlgorithmSpec alg_mst_rb_unary();

// Ranking-based binary unbiased Kruskal with Hamming-probe bookkeeping.
AlgorithmSpec alg_mst_binary();

// Ranking-based 3-ary unbiased Kruskal; O(m) queries.
AlgorithmSpec alg_mst_3ary();

// Elitist (1+1) heuristics on the bi-criteria objective.
AlgorithmSpec baseline_rls_mst();
AlgorithmSpec baseline_ea_mst();

// Lemma-22 probe: decides Hamming(x, y) == k in one query on MST objectives.
bool hamming_probe(Session& s, Handle x, Handle y, std::size_t k);

} // namespace bbox::mst
