#include "bbox/ops/pred_ops.hpp"

#include <algorithm>

#include "bbox/ops/pred_decode.hpp"

namespace bbox::ops {

namespace {

const PredVector& as_pred(const Point& p) { return std::get<PredVector>(p); }

std::int32_t pick(const std::vector<std::int32_t>& v, RngStream& rng) {
    return v[static_cast<std::size_t>(rng.below(v.size()))];
}

} // namespace

VariationOp self_loops(std::int32_t n) {
    return {"self_loops", 0, Domain::PredVector,
            [n](std::span<const Point>, RngStream&) { return Point{PredVector(n)}; }};
}

VariationOp one_to_source(std::int32_t n) {
    return {"one_to_source", 0, Domain::PredVector, [n](std::span<const Point>, RngStream& rng) {
                PredVector x(n);
                x.set(static_cast<std::int32_t>(2 + rng.below(static_cast<std::uint64_t>(n - 1))), 1);
                return Point{x};
            }};
}

VariationOp extend_path() {
    return {"extend_path", 1, Domain::PredVector, [](std::span<const Point> ps, RngStream& rng) {
                const PredVector& x = as_pred(ps[0]);
                auto path = path_from_source(x);
                if (!path) {
                    flag_malformed_parent();
                    return Point{x};
                }
                std::vector<std::int32_t> off;
                std::vector<bool> on_path(static_cast<std::size_t>(x.n) + 1, false);
                for (auto v : *path) on_path[static_cast<std::size_t>(v)] = true;
                for (std::int32_t v = 2; v <= x.n; ++v)
                    if (!on_path[static_cast<std::size_t>(v)]) off.push_back(v);
                if (off.empty()) {
                    flag_malformed_parent();
                    return Point{x};
                }
                PredVector z = x;
                z.set(pick(off, rng), path->back());
                return Point{z};
            }};
}

VariationOp extend_tree() {
    return {"extend_tree", 1, Domain::PredVector, [](std::span<const Point> ps, RngStream& rng) {
                const PredVector& x = as_pred(ps[0]);
                auto mask = connected_mask(x);
                std::vector<std::int32_t> connected{1}, unconnected;
                for (std::int32_t v = 2; v <= x.n; ++v) {
                    if (mask[static_cast<std::size_t>(v)])
                        connected.push_back(v);
                    else
                        unconnected.push_back(v);
                }
                if (unconnected.empty()) {
                    flag_malformed_parent();
                    return Point{x};
                }
                PredVector z = x;
                z.set(pick(unconnected, rng), pick(connected, rng));
                return Point{z};
            }};
}

VariationOp attach(std::shared_ptr<const TreeShape> target) {
    return {"attach", 1, Domain::PredVector,
            [target](std::span<const Point> ps, RngStream& rng) {
                const PredVector& y = as_pred(ps[0]);
                auto parent = tree_from_source(y);
                if (!parent) {
                    flag_malformed_parent();
                    return Point{y};
                }
                int s = 0;
                std::vector<std::int32_t> unconnected;
                for (std::int32_t v = 1; v <= y.n; ++v) {
                    if ((*parent)[static_cast<std::size_t>(v)] >= 0)
                        ++s;
                    else
                        unconnected.push_back(v);
                }
                if (unconnected.empty()) {
                    flag_malformed_parent();
                    return Point{y};
                }
                std::int32_t active = target->active_label(*parent, s);
                if (active == 0) {
                    flag_malformed_parent();
                    return Point{y};
                }
                PredVector z = y;
                z.set(pick(unconnected, rng), active);
                return Point{z};
            }};
}

VariationOp redirect_one() {
    return {"redirect_one", 1, Domain::PredVector, [](std::span<const Point> ps, RngStream& rng) {
                PredVector x = as_pred(ps[0]);
                std::int32_t node = static_cast<std::int32_t>(2 + rng.below(x.size()));
                std::int32_t cur = x.get(node);
                std::int32_t img = static_cast<std::int32_t>(1 + rng.below(static_cast<std::uint64_t>(x.n - 1)));
                if (img >= cur) ++img; // uniform over [n] \ {cur}
                x.set(node, img);
                return Point{x};
            }};
}

VariationOp all_to_one(std::int32_t n) {
    return {"all_to_one", 0, Domain::PredVector, [n](std::span<const Point>, RngStream& rng) {
                std::int32_t j = static_cast<std::int32_t>(2 + rng.below(static_cast<std::uint64_t>(n - 1)));
                PredVector x(n);
                for (std::int32_t v = 2; v <= n; ++v) x.set(v, j);
                return Point{x};
            }};
}

VariationOp all_to_same(std::int32_t n) {
    return {"all_to_same", 0, Domain::PredVector, [n](std::span<const Point>, RngStream& rng) {
                std::int32_t j = static_cast<std::int32_t>(1 + rng.below(static_cast<std::uint64_t>(n)));
                PredVector x(n);
                for (std::int32_t v = 2; v <= n; ++v) x.set(v, j);
                return Point{x};
            }};
}

VariationOp uniform_pred(std::int32_t n) {
    return {"uniform_pred", 0, Domain::PredVector, [n](std::span<const Point>, RngStream& rng) {
                PredVector x(n);
                for (std::int32_t v = 2; v <= n; ++v)
                    x.set(v, static_cast<std::int32_t>(1 + rng.below(static_cast<std::uint64_t>(n))));
                return Point{x};
            }};
}

VariationOp coincide_probe(std::int64_t k) {
    return {"coincide_probe_" + std::to_string(k), 2, Domain::PredVector,
            [k](std::span<const Point> ps, RngStream&) {
                const PredVector& a = as_pred(ps[0]);
                const PredVector& b = as_pred(ps[1]);
                std::int64_t c = 0;
                for (std::int32_t v = 2; v <= a.n; ++v)
                    if (a.get(v) == b.get(v) && a.get(v) != v) ++c;
                if (c == k) return Point{a};
                return Point{PredVector(a.n)};
            }};
}

VariationOp endpoint_connected_probe() {
    return {"endpoint_probe", 2, Domain::PredVector, [](std::span<const Point> ps, RngStream&) {
                const PredVector& a = as_pred(ps[0]);
                const PredVector& b = as_pred(ps[1]);
                auto path = path_from_source(b);
                if (!path) {
                    flag_malformed_parent();
                    return Point{a};
                }
                std::int32_t endpoint = path->back();
                auto mask = connected_mask(a);
                if (mask[static_cast<std::size_t>(endpoint)]) return Point{a};
                return Point{PredVector(a.n)};
            }};
}

VariationOp pred_merge() {
    return {"pred_merge", 3, Domain::PredVector, [](std::span<const Point> ps, RngStream&) {
                const PredVector& base = as_pred(ps[0]);
                const PredVector& dnew = as_pred(ps[1]);
                const PredVector& dref = as_pred(ps[2]);
                PredVector out = base;
                for (std::int32_t v = 2; v <= base.n; ++v)
                    if (dnew.get(v) != dref.get(v)) out.set(v, dnew.get(v));
                return Point{out};
            }};
}

VariationOp attach_unmarked() {
    return {"attach_unmarked", 3, Domain::PredVector, [](std::span<const Point> ps, RngStream& rng) {
                const PredVector& cur = as_pred(ps[0]);
                const PredVector& prev = as_pred(ps[1]);
                const PredVector& marks = as_pred(ps[2]);
                std::int32_t t = 0;
                for (std::int32_t v = 2; v <= cur.n; ++v) {
                    if (cur.get(v) != prev.get(v)) {
                        if (t) {
                            flag_malformed_parent();
                            return Point{cur}; // not a single-extension pair
                        }
                        t = v;
                    }
                }
                if (!t) {
                    flag_malformed_parent();
                    return Point{cur};
                }
                std::vector<std::int32_t> cand;
                for (std::int32_t v = 2; v <= cur.n; ++v)
                    if (cur.self_loop(v) && marks.self_loop(v)) cand.push_back(v);
                if (cand.empty()) {
                    flag_malformed_parent();
                    return Point{cur};
                }
                PredVector z = cur;
                z.set(pick(cand, rng), t);
                return Point{z};
            }};
}

VariationOp attach_to_source_unmarked() {
    return {"attach_src_unmarked", 2, Domain::PredVector,
            [](std::span<const Point> ps, RngStream& rng) {
                const PredVector& cur = as_pred(ps[0]);
                const PredVector& marks = as_pred(ps[1]);
                std::vector<std::int32_t> cand;
                for (std::int32_t v = 2; v <= cur.n; ++v)
                    if (cur.self_loop(v) && marks.self_loop(v)) cand.push_back(v);
                if (cand.empty()) {
                    flag_malformed_parent();
                    return Point{cur};
                }
                PredVector z = cur;
                z.set(pick(cand, rng), 1);
                return Point{z};
            }};
}

VariationOp redirect_2_to_1() {
    return {"redirect_2_to_1", 1, Domain::PredVector, [](std::span<const Point> ps, RngStream&) {
                PredVector x = as_pred(ps[0]);
                x.set(2, 1);
                return Point{x};
            }};
}

} // namespace bbox::ops
