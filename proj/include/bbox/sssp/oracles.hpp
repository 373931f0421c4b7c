#pragma once

#include <memory>

#include "bbox/core/oracle.hpp"
#include "bbox/sssp/instance.hpp"

namespace bbox::sssp {

namespace detail {

// Dense weight lookup shared by both oracles; 0 marks a missing edge
// (instance weights are strictly positive).
struct WeightTable {
    std::int32_t n = 0;
    std::vector<double> w; // (u-1)*n + (v-1)

    explicit WeightTable(const mst::GraphInstance& g)
        : n(g.n), w(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n), 0.0) {
        for (const auto& e : g.edges) {
            at(e.u, e.v) = e.w;
            at(e.v, e.u) = e.w;
        }
    }
    double& at(std::int32_t u, std::int32_t v) {
        return w[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(v - 1)];
    }
    double get(std::int32_t u, std::int32_t v) const {
        return w[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(v - 1)];
    }
};

// Distances of every node under a predecessor vector: follow each chain to
// the source and sum the weights from the source side out (the same
// association Dijkstra uses, keeping float results bit-identical). INF for
// self-loops, missing edges, and cycles; INF is absorbing along chains.
std::vector<double> chain_distances(const WeightTable& wt, const PredVector& x);

} // namespace detail

// Multi-criteria tuple of the n-1 non-source distances.
class MultiOracle : public Oracle {
public:
    explicit MultiOracle(SSSPInstance inst)
        : inst_(std::move(inst)), wt_(inst_.graph) {}

    Objective evaluate(const Point& p) const override {
        const auto& x = std::get<PredVector>(p);
        auto d = detail::chain_distances(wt_, x);
        DistTuple t;
        t.d.assign(d.begin() + 2, d.end());
        return t;
    }

    Domain domain() const override { return Domain::PredVector; }
    std::size_t dimension() const override { return static_cast<std::size_t>(inst_.n() - 1); }
    const SSSPInstance& instance() const { return inst_; }

    Objective optimum() const {
        auto ref = dijkstra_ref(inst_);
        return DistTuple{optimal_tuple(ref, inst_.n())};
    }

private:
    SSSPInstance inst_;
    detail::WeightTable wt_;
};

// Single-criterion sum with the C penalty substituted for INF entries.
class SingleOracle : public Oracle {
public:
    explicit SingleOracle(SSSPInstance inst)
        : inst_(std::move(inst)), wt_(inst_.graph) {}

    Objective evaluate(const Point& p) const override {
        const auto& x = std::get<PredVector>(p);
        auto d = detail::chain_distances(wt_, x);
        double sum = 0.0;
        for (std::int32_t v = 2; v <= inst_.n(); ++v) {
            double dv = d[static_cast<std::size_t>(v)];
            sum += std::isinf(dv) ? inst_.big_c : dv;
        }
        return Scalar{sum};
    }

    Domain domain() const override { return Domain::PredVector; }
    std::size_t dimension() const override { return static_cast<std::size_t>(inst_.n() - 1); }
    const SSSPInstance& instance() const { return inst_; }

    Objective optimum() const {
        // evaluate the reference tree through this oracle so the summation
        // order matches queries exactly
        auto ref = dijkstra_ref(inst_);
        return evaluate(Point{spt_point(ref, inst_.n())});
    }

private:
    SSSPInstance inst_;
    detail::WeightTable wt_;
};

} // namespace bbox::sssp
