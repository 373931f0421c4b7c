#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bbox/core/types.hpp"
#include "bbox/core/variation.hpp"

namespace bbox::ops {

// uniform(): 0-ary, every string in {0,1}^m equiprobable.
VariationOp uniform_bits(std::size_t m);

// RLS(x): flips exactly one bit, position uniform.
VariationOp rls();

// complement(x): bit-wise complement, deterministic.
VariationOp complement();

// RLS_k(x, y): flips exactly k bits of x, chosen uniformly among the positions
// where x and y differ; outputs x when they differ in fewer than k bits.
VariationOp rls_k(std::size_t k);

// update(a, b, c): returns c where a and b agree, a where they differ.
VariationOp update();

// test(a, b, c): returns a where b and c agree, 1-a where they differ.
VariationOp test_op();

// Standard bit mutation: each bit flips independently with probability p.
VariationOp standard_mutation(double p);

// RLS variant used by the MST baseline: one-bit and two-bit flips, each with
// probability 1/2.
VariationOp one_or_two_flip();

// Hamming-distance probe: returns x when hamming(x, y) == k, otherwise a
// uniform 1-Hamming neighbor of x.
VariationOp hamming_probe_op(std::size_t k);

// Deliberately biased control: always flips bit 0.
VariationOp flip_first_bit();

} // namespace bbox::ops
