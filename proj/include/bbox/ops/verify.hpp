#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bbox/core/variation.hpp"
#include "bbox/ops/symmetry.hpp"

namespace bbox::ops {

struct VerifyConfig {
    std::size_t trials = 100000;
    std::size_t symmetries = 10;
    double threshold = 0.05;
    std::uint64_t seed = 0x5EEDULL;
};

struct VerifyReport {
    std::string op;
    std::string notion;
    std::size_t dim = 0;
    std::size_t trials = 0;
    double max_tv = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

std::string to_json(const VerifyReport& r);

// Statistical unbiasedness check: over a panel of parent tuples and a panel
// of random symmetries T, compares the empirical distribution of op(T(y))
// against T(op(y)) and reports the maximum total-variation distance.
// Dimension must keep the output space enumerable (bit strings m <= 8,
// predecessor vectors n <= 6).
VerifyReport verify_unbiased(const VariationOp& op, SymmetryNotion notion, std::size_t dim,
                             const std::vector<std::vector<Point>>& parent_panel,
                             const VerifyConfig& cfg = {});

// Random parent tuples for operators without structural preconditions.
std::vector<std::vector<Point>> random_parent_panel(const VariationOp& op, std::size_t dim,
                                                    std::size_t count, std::uint64_t seed);

} // namespace bbox::ops
