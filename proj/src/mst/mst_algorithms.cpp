#include "bbox/mst/mst_algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "bbox/core/view.hpp"
#include "bbox/ops/bit_ops.hpp"

namespace bbox::mst {

namespace {

double w_of(const Session& s, Handle h) { return std::get<BiCriteria>(s.value(h)).weight; }
std::int32_t c_of(const Session& s, Handle h) {
    return std::get<BiCriteria>(s.value(h)).components;
}

BitString unit_vector(std::size_t m, std::size_t i) {
    BitString x(m);
    x[i] = 1;
    return x;
}

// Lemma 22 as a session helper: one query through the probe operator, decided
// by objective equality (a 1-Hamming neighbor of x can never share x's value
// on an MST objective).
bool probe_hamming_is(Session& s, Handle x, Handle y, std::size_t k) {
    Handle z = s.apply(ops::hamming_probe_op(k), {x, y});
    return same_objective(s, z, x);
}

// Step 1 of the binary/3-ary algorithms: from a uniform point and its
// complement, race both down to the empty graph; expected 2m queries.
Handle descend_to_empty(Session& s, std::size_t m) {
    Handle hx = s.apply(ops::uniform_bits(m), {});
    Handle hy = s.apply(ops::complement(), {hx});
    auto rls1 = ops::rls_k(1);
    std::size_t resolved = 0;
    while (resolved < m) {
        if (s.rng().coin()) {
            Handle z = s.apply(rls1, {hx, hy});
            if (weight_less(s, z, hx)) {
                hx = z;
                ++resolved;
            }
        } else {
            Handle z = s.apply(rls1, {hy, hx});
            if (weight_less(s, z, hy)) {
                hy = z;
                ++resolved;
            }
        }
    }
    return hx;
}

// Builds base ∪ {e} where `target` is a 1-edge point with e outside base.
// Bisects the differing positions with rls_k, keeping the branch that
// contains e; each trial is verified with one Hamming probe against the
// empty graph h0.
Handle isolate_union(Session& s, Handle base, std::size_t base_edges, Handle target, Handle h0) {
    const std::size_t d = base_edges + 1;
    if (d == 1) return s.apply(ops::rls_k(1), {base, target});

    const std::size_t half = (d + 1) / 2;
    Handle cur{};
    std::size_t cur_edges = base_edges - half + 2;
    for (;;) {
        Handle u = s.apply(ops::rls_k(half), {base, target});
        if (probe_hamming_is(s, u, h0, cur_edges)) {
            cur = u;
            break;
        }
    }
    std::size_t remaining = half; // |differ(cur, base)|, e included
    while (remaining > 1) {
        std::size_t g = remaining / 2;
        Handle t = s.apply(ops::rls_k(g), {cur, base});
        if (probe_hamming_is(s, t, h0, cur_edges + g)) {
            cur = t;
            cur_edges += g;
            remaining -= g;
        }
    }
    return cur;
}

// Weight-order of edge handles under the session's view; ties keep discovery
// order, matching the reference Kruskal's stable sort.
std::vector<std::size_t> weight_order(const Session& s, const std::vector<Handle>& hs) {
    std::vector<std::size_t> order(hs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return weight_less(s, hs[a], hs[b]);
    });
    return order;
}

} // namespace

bool hamming_probe(Session& s, Handle x, Handle y, std::size_t k) {
    return probe_hamming_is(s, x, y, k);
}

AlgorithmSpec alg_mst_unrestricted() {
    return {"mst-unrestricted", Capability::ranking_unrestricted(),
            [](Session& s, const InstanceFacts& facts) {
                const auto m = static_cast<std::size_t>(facts.m);
                Handle empty = s.query(Point{BitString(m)});
                std::vector<Handle> units;
                units.reserve(m);
                for (std::size_t i = 0; i < m; ++i)
                    units.push_back(s.query(Point{unit_vector(m, i)}));
                auto order = weight_order(s, units);

                BitString x(m);
                Handle hx = empty;
                std::int32_t accepted = 0;
                for (std::size_t idx : order) {
                    BitString z = x;
                    z[idx] = 1;
                    Handle hz = s.query(Point{z});
                    if (comps_less(s, hz, hx)) {
                        x = z;
                        hx = hz;
                        if (++accepted == facts.n - 1) return; // spanning
                    }
                }
            }};
}

AlgorithmSpec alg_mst_unary() {
    return {"mst-unary", Capability::unbiased(1),
            [](Session& s, const InstanceFacts& facts) {
                if (facts.duplicate_weights) throw DuplicateWeights{};
                const auto m = static_cast<std::size_t>(facts.m);
                auto rls = ops::rls();

                // Step 1: descend to the empty graph by accepted removals.
                Handle h = s.apply(ops::uniform_bits(m), {});
                while (w_of(s, h) > 0.0) {
                    Handle z = s.apply(rls, {h});
                    if (w_of(s, z) < w_of(s, h)) h = z;
                }
                Handle h0 = h;

                // Step 2: add edges one by one; each accepted delta is the
                // weight of the edge just added.
                std::vector<double> weights;
                weights.reserve(m);
                Handle cur = h0;
                while (weights.size() < m) {
                    Handle z = s.apply(rls, {cur});
                    double delta = w_of(s, z) - w_of(s, cur);
                    if (delta > 0.0) {
                        weights.push_back(delta);
                        cur = z;
                    }
                }
                std::sort(weights.begin(), weights.end());
                for (std::size_t i = 1; i < m; ++i)
                    if (close(weights[i - 1], weights[i])) throw DuplicateWeights{};

                // Step 3: Kruskal-order inclusion tests from the empty graph.
                Handle y = h0;
                std::size_t next_target = 0;
                std::int32_t accepted = 0;
                // deltas seen while hunting the current target, reusable for
                // later targets until the solution advances
                std::map<std::size_t, Handle> cache;
                while (accepted < facts.n - 1) {
                    std::optional<Handle> z;
                    if (auto it = cache.find(next_target); it != cache.end()) z = it->second;
                    while (!z) {
                        Handle cand = s.apply(rls, {y});
                        double delta = w_of(s, cand) - w_of(s, y);
                        if (delta <= 0.0) continue; // removal sample
                        auto lo = std::lower_bound(weights.begin(), weights.end(), delta - 1e-9);
                        if (lo == weights.end()) continue;
                        auto k = static_cast<std::size_t>(lo - weights.begin());
                        if (!close(weights[k], delta)) continue;
                        if (k == next_target)
                            z = cand;
                        else if (k > next_target)
                            cache.emplace(k, cand);
                    }
                    if (comps_less(s, *z, y)) {
                        y = *z;
                        ++accepted;
                        cache.clear(); // cached points extend the old solution
                    }
                    ++next_target;
                }
            }};
}

AlgorithmSpec alg_mst_rb_unary() {
    return {"mst-rb-unary", Capability::ranking_unbiased(1),
            [](Session& s, const InstanceFacts& facts) {
                const auto m = static_cast<std::size_t>(facts.m);
                auto rls = ops::rls();
                const auto cap = static_cast<std::size_t>(
                    std::ceil(3.0 * static_cast<double>(m) *
                              std::log(std::max<double>(static_cast<double>(m), 2.0)))) + 1;

                // Step 1: descend until a long streak without an accepted
                // removal certifies the empty graph.
                Handle h = s.apply(ops::uniform_bits(m), {});
                std::size_t streak = 0;
                while (streak < cap) {
                    Handle z = s.apply(rls, {h});
                    if (weight_less(s, z, h)) {
                        h = z;
                        streak = 0;
                    } else {
                        ++streak;
                    }
                }

                // Step 3 (no weight-learning step): per phase, sample enough
                // one-bit flips to see every edge w.h.p., then accept the
                // cheapest includable one.
                Handle y = h;
                std::int32_t accepted = 0;
                while (accepted < facts.n - 1) {
                    std::optional<Handle> best;
                    for (std::size_t t = 0; t < cap; ++t) {
                        Handle z = s.apply(rls, {y});
                        if (!comps_less(s, z, y)) continue; // cycle or removal
                        if (!best || weight_less(s, z, *best)) best = z;
                    }
                    if (best) {
                        y = *best;
                        ++accepted;
                    }
                    // no includable edge seen: redraw the phase
                }
            }};
}

AlgorithmSpec alg_mst_binary() {
    return {"mst-binary", Capability::ranking_unbiased(2),
            [](Session& s, const InstanceFacts& facts) {
                const auto m = static_cast<std::size_t>(facts.m);
                Handle h0 = descend_to_empty(s, m);
                auto rls = ops::rls();

                // Step 2: collect all m one-edge points, deduplicating
                // structurally via the probe against the storage point.
                std::vector<Handle> edge_points;
                Handle storage = h0;
                while (edge_points.size() < m) {
                    Handle z = s.apply(rls, {h0});
                    if (!edge_points.empty() &&
                        probe_hamming_is(s, storage, z, edge_points.size() - 1))
                        continue; // already stored
                    storage = isolate_union(s, storage, edge_points.size(), z, h0);
                    edge_points.push_back(z);
                }
                auto order = weight_order(s, edge_points);

                // Step 3: test edges in weight order; isolating the edge onto
                // the current solution costs O(log) probes.
                Handle x = h0;
                std::size_t x_edges = 0;
                for (std::size_t idx : order) {
                    Handle z = isolate_union(s, x, x_edges, edge_points[idx], h0);
                    if (comps_less(s, z, x)) {
                        x = z;
                        if (++x_edges == static_cast<std::size_t>(facts.n) - 1) return;
                    }
                }
            }};
}

AlgorithmSpec alg_mst_3ary() {
    return {"mst-3ary", Capability::ranking_unbiased(3),
            [](Session& s, const InstanceFacts& facts) {
                const auto m = static_cast<std::size_t>(facts.m);
                Handle h0 = descend_to_empty(s, m);

                // Step 2: enumerate all m one-bit flips deterministically;
                // the complement point tracks which edges remain unseen.
                Handle marker = s.apply(ops::complement(), {h0});
                auto rls1 = ops::rls_k(1);
                auto upd = ops::update();
                std::vector<Handle> edge_points;
                edge_points.reserve(m);
                for (std::size_t i = 0; i < m; ++i) {
                    Handle z = s.apply(rls1, {h0, marker});
                    edge_points.push_back(z);
                    if (i + 1 < m) marker = s.apply(upd, {marker, z, h0});
                }
                auto order = weight_order(s, edge_points);

                // Step 3: one test query per edge in weight order.
                auto test = ops::test_op();
                Handle x = h0;
                std::int32_t accepted = 0;
                for (std::size_t idx : order) {
                    Handle z = s.apply(test, {x, h0, edge_points[idx]});
                    if (comps_less(s, z, x)) {
                        x = z;
                        if (++accepted == facts.n - 1) return;
                    }
                }
            }};
}

namespace {

AlgorithmSpec elitist_baseline(std::string id, bool ea) {
    return {std::move(id), Capability::unbiased(1),
            [ea](Session& s, const InstanceFacts& facts) {
                const auto m = static_cast<std::size_t>(facts.m);
                auto op = ea ? ops::standard_mutation(1.0 / static_cast<double>(m))
                             : ops::one_or_two_flip();
                Handle h = s.apply(ops::uniform_bits(m), {});
                for (;;) {
                    Handle z = s.apply(op, {h});
                    // lexicographic (components, weight) acceptance, ties kept
                    const auto& a = std::get<BiCriteria>(s.value(z));
                    const auto& b = std::get<BiCriteria>(s.value(h));
                    if (a.components < b.components ||
                        (a.components == b.components && a.weight <= b.weight))
                        h = z;
                }
            }};
}

} // namespace

AlgorithmSpec baseline_rls_mst() { return elitist_baseline("mst-rls", false); }
AlgorithmSpec baseline_ea_mst() { return elitist_baseline("mst-ea", true); }

} // namespace bbox::mst
