#pragma once

#include "bbox/core/run.hpp"

namespace bbox::sssp {

// Dijkstra simulation on the multi-criteria oracle; at most n-1 queries.
AlgorithmSpec alg_sssp_multi();

// Complete graphs: query each decomposition tree, reconstruct every weight,
// then query the computed shortest-path tree; floor((n+1)/2) + 1 queries.
AlgorithmSpec alg_sssp_multi_complete();

// Dijkstra imitation on the single-criterion oracle, n(n-1)/2 probes.
AlgorithmSpec alg_sssp_single_unrestricted();

// Ranking-based variant; at most (n-1)^2 queries.
AlgorithmSpec alg_sssp_single_ranking();

// Structure-preserving unbiased algorithms.
AlgorithmSpec alg_struct_unary();
AlgorithmSpec alg_struct_binary();
AlgorithmSpec alg_struct_3ary();

// Redirecting unary RLS baseline, expected O(n^3).
AlgorithmSpec baseline_redirect_rls();

// Learning the penalty constant C (one session query each; the redirecting
// variant issues two and is right with probability >= 1 - n^-2).
double learn_C_unrestricted(Session& s, std::int32_t n);
double learn_C_struct(Session& s, std::int32_t n);
double learn_C_redirect(Session& s, std::int32_t n);

} // namespace bbox::sssp
