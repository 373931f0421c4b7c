#include "bbox/ops/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace bbox::ops {

namespace {

template <typename T>
void shuffle(std::vector<T>& v, RngStream& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(i))]);
}

} // namespace

BitString apply_symmetry(const HypercubeSymmetry& t, const BitString& x) {
    BitString out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[t.perm[i]] ^ t.mask[i];
    return out;
}

PredVector apply_symmetry(const StructSymmetry& t, const PredVector& x) {
    const std::int32_t n = x.n;
    std::vector<std::int32_t> inv(static_cast<std::size_t>(n) + 1);
    for (std::int32_t v = 1; v <= n; ++v) inv[static_cast<std::size_t>(t.sigma[static_cast<std::size_t>(v)])] = v;
    PredVector out(n);
    for (std::int32_t j = 2; j <= n; ++j)
        out.set(j, t.sigma[static_cast<std::size_t>(x.get(inv[static_cast<std::size_t>(j)]))]);
    return out;
}

PredVector apply_symmetry(const RedirectSymmetry& t, const PredVector& x) {
    PredVector out(x.n);
    for (std::int32_t v = 2; v <= x.n; ++v)
        out.set(v, t.sigmas[static_cast<std::size_t>(v - 2)][static_cast<std::size_t>(x.get(v))]);
    return out;
}

Point apply_symmetry(const Symmetry& t, const Point& p) {
    if (const auto* h = std::get_if<HypercubeSymmetry>(&t))
        return Point{apply_symmetry(*h, std::get<BitString>(p))};
    if (const auto* s = std::get_if<StructSymmetry>(&t))
        return Point{apply_symmetry(*s, std::get<PredVector>(p))};
    return Point{apply_symmetry(std::get<RedirectSymmetry>(t), std::get<PredVector>(p))};
}

Symmetry random_symmetry(SymmetryNotion notion, std::size_t dim, RngStream& rng) {
    switch (notion) {
        case SymmetryNotion::HypercubeUnbiased: {
            HypercubeSymmetry t;
            t.perm.resize(dim);
            std::iota(t.perm.begin(), t.perm.end(), std::size_t{0});
            shuffle(t.perm, rng);
            t.mask = BitString(dim);
            for (std::size_t i = 0; i < dim; ++i) t.mask[i] = static_cast<std::uint8_t>(rng.coin());
            return t;
        }
        case SymmetryNotion::StructurePreserving: {
            const auto n = static_cast<std::int32_t>(dim);
            std::vector<std::int32_t> rest;
            for (std::int32_t v = 2; v <= n; ++v) rest.push_back(v);
            shuffle(rest, rng);
            StructSymmetry t;
            t.sigma.resize(dim + 1);
            t.sigma[1] = 1;
            for (std::int32_t v = 2; v <= n; ++v) t.sigma[static_cast<std::size_t>(v)] = rest[static_cast<std::size_t>(v - 2)];
            return t;
        }
        case SymmetryNotion::Redirecting: {
            const auto n = static_cast<std::int32_t>(dim);
            RedirectSymmetry t;
            for (std::int32_t v = 2; v <= n; ++v) {
                std::vector<std::int32_t> perm;
                for (std::int32_t i = 1; i <= n; ++i) perm.push_back(i);
                shuffle(perm, rng);
                std::vector<std::int32_t> lut(static_cast<std::size_t>(n) + 1);
                for (std::int32_t i = 1; i <= n; ++i) lut[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i - 1)];
                t.sigmas.push_back(std::move(lut));
            }
            return t;
        }
    }
    throw Error("unknown symmetry notion");
}

std::vector<StructSymmetry> all_source_fixing_permutations(std::int32_t n) {
    std::vector<std::int32_t> rest;
    for (std::int32_t v = 2; v <= n; ++v) rest.push_back(v);
    std::vector<StructSymmetry> out;
    do {
        StructSymmetry t;
        t.sigma.resize(static_cast<std::size_t>(n) + 1);
        t.sigma[1] = 1;
        for (std::int32_t v = 2; v <= n; ++v)
            t.sigma[static_cast<std::size_t>(v)] = rest[static_cast<std::size_t>(v - 2)];
        out.push_back(std::move(t));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

} // namespace bbox::ops
