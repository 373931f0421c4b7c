#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bbox/core/common.hpp"
#include "bbox/core/types.hpp"

namespace bbox::ops {

// The three symmetry notions a variation operator can be unbiased under.
enum class SymmetryNotion { HypercubeUnbiased, StructurePreserving, Redirecting };

inline const char* to_string(SymmetryNotion n) {
    switch (n) {
        case SymmetryNotion::HypercubeUnbiased: return "hypercube";
        case SymmetryNotion::StructurePreserving: return "structure-preserving";
        case SymmetryNotion::Redirecting: return "redirecting";
    }
    return "?";
}

// xor-shift z plus bit-position permutation sigma: T(x)_i = x_{sigma(i)} ^ z_i.
struct HypercubeSymmetry {
    std::vector<std::size_t> perm;
    BitString mask;
};

// Source-fixing node relabeling sigma (sigma[1] = 1):
// T(x)_j = sigma(x_{sigma^{-1}(j)}).
struct StructSymmetry {
    std::vector<std::int32_t> sigma; // 1-based, size n+1
};

// Independent per-position image permutations: T(x)_i = sigma_i(x_i).
struct RedirectSymmetry {
    std::vector<std::vector<std::int32_t>> sigmas; // sigmas[v-2] is a perm of [n], 1-based
};

using Symmetry = std::variant<HypercubeSymmetry, StructSymmetry, RedirectSymmetry>;

BitString apply_symmetry(const HypercubeSymmetry& t, const BitString& x);
PredVector apply_symmetry(const StructSymmetry& t, const PredVector& x);
PredVector apply_symmetry(const RedirectSymmetry& t, const PredVector& x);
Point apply_symmetry(const Symmetry& t, const Point& p);

Symmetry random_symmetry(SymmetryNotion notion, std::size_t dim, RngStream& rng);

// All permutations of [n] fixing the source; used for brute-force
// automorphism checks at small n.
std::vector<StructSymmetry> all_source_fixing_permutations(std::int32_t n);

} // namespace bbox::ops
