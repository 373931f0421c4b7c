#include "bbox/ops/bit_ops.hpp"

namespace bbox::ops {

namespace {

const BitString& as_bits(const Point& p) { return std::get<BitString>(p); }

std::vector<std::size_t> differing_positions(const BitString& x, const BitString& y) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) idx.push_back(i);
    return idx;
}

// uniform k-subset of idx, Fisher-Yates prefix
void flip_random_subset(BitString& out, std::vector<std::size_t>& idx, std::size_t k,
                        RngStream& rng) {
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
        std::swap(idx[i], idx[j]);
        out[idx[i]] ^= 1;
    }
}

} // namespace

VariationOp uniform_bits(std::size_t m) {
    return {"uniform", 0, Domain::BitString, [m](std::span<const Point>, RngStream& rng) {
                BitString x(m);
                for (std::size_t i = 0; i < m; ++i) x[i] = static_cast<std::uint8_t>(rng.coin());
                return Point{x};
            }};
}

VariationOp rls() {
    return {"rls", 1, Domain::BitString, [](std::span<const Point> ps, RngStream& rng) {
                BitString x = as_bits(ps[0]);
                x[static_cast<std::size_t>(rng.below(x.size()))] ^= 1;
                return Point{x};
            }};
}

VariationOp complement() {
    return {"complement", 1, Domain::BitString, [](std::span<const Point> ps, RngStream&) {
                BitString x = as_bits(ps[0]);
                for (auto& b : x.bits) b ^= 1;
                return Point{x};
            }};
}

VariationOp rls_k(std::size_t k) {
    return {"rls_" + std::to_string(k), 2, Domain::BitString,
            [k](std::span<const Point> ps, RngStream& rng) {
                BitString x = as_bits(ps[0]);
                auto idx = differing_positions(x, as_bits(ps[1]));
                if (idx.size() < k) return Point{x}; // "it outputs x"
                flip_random_subset(x, idx, k, rng);
                return Point{x};
            }};
}

VariationOp update() {
    return {"update", 3, Domain::BitString, [](std::span<const Point> ps, RngStream&) {
                const BitString& a = as_bits(ps[0]);
                const BitString& b = as_bits(ps[1]);
                const BitString& c = as_bits(ps[2]);
                BitString out(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] == b[i]) ? c[i] : a[i];
                return Point{out};
            }};
}

VariationOp test_op() {
    return {"test", 3, Domain::BitString, [](std::span<const Point> ps, RngStream&) {
                const BitString& a = as_bits(ps[0]);
                const BitString& b = as_bits(ps[1]);
                const BitString& c = as_bits(ps[2]);
                BitString out(a.size());
                for (std::size_t i = 0; i < a.size(); ++i)
                    out[i] = (b[i] == c[i]) ? a[i] : static_cast<std::uint8_t>(1 - a[i]);
                return Point{out};
            }};
}

VariationOp standard_mutation(double p) {
    return {"stdmut", 1, Domain::BitString, [p](std::span<const Point> ps, RngStream& rng) {
                BitString x = as_bits(ps[0]);
                for (auto& b : x.bits)
                    if (rng.unit() < p) b ^= 1;
                return Point{x};
            }};
}

VariationOp one_or_two_flip() {
    return {"rls12", 1, Domain::BitString, [](std::span<const Point> ps, RngStream& rng) {
                BitString x = as_bits(ps[0]);
                const std::size_t m = x.size();
                if (m >= 2 && rng.coin()) {
                    std::size_t i = static_cast<std::size_t>(rng.below(m));
                    std::size_t j = static_cast<std::size_t>(rng.below(m - 1));
                    if (j >= i) ++j;
                    x[i] ^= 1;
                    x[j] ^= 1;
                } else {
                    x[static_cast<std::size_t>(rng.below(m))] ^= 1;
                }
                return Point{x};
            }};
}

VariationOp hamming_probe_op(std::size_t k) {
    return {"hprobe_" + std::to_string(k), 2, Domain::BitString,
            [k](std::span<const Point> ps, RngStream& rng) {
                const BitString& x = as_bits(ps[0]);
                const BitString& y = as_bits(ps[1]);
                if (hamming(x, y) == k) return Point{x};
                BitString z = x;
                z[static_cast<std::size_t>(rng.below(z.size()))] ^= 1;
                return Point{z};
            }};
}

VariationOp flip_first_bit() {
    return {"flip_bit_0", 1, Domain::BitString, [](std::span<const Point> ps, RngStream&) {
                BitString x = as_bits(ps[0]);
                x[0] ^= 1;
                return Point{x};
            }};
}

} // namespace bbox::ops
