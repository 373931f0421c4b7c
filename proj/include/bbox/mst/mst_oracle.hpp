#pragma once

#include "bbox/core/oracle.hpp"
#include "bbox/mst/graph.hpp"

namespace bbox::mst {

// Bi-criteria MST objective: x selects an edge subset E_x; the value is
// (number of connected components over all n vertices, total weight of E_x).
class MstOracle : public Oracle {
public:
    explicit MstOracle(GraphInstance g) : g_(std::move(g)) {}

    Objective evaluate(const Point& p) const override {
        const auto& x = std::get<BitString>(p);
        if (static_cast<std::int64_t>(x.size()) != g_.m())
            throw LengthMismatch("bit string length != m");
        UnionFind uf(g_.n);
        std::int32_t components = g_.n;
        double weight = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!x[i]) continue;
            weight += g_.edges[i].w;
            if (uf.unite(g_.edges[i].u, g_.edges[i].v)) --components;
        }
        return BiCriteria{components, weight};
    }

    Domain domain() const override { return Domain::BitString; }
    std::size_t dimension() const override { return static_cast<std::size_t>(g_.m()); }

    const GraphInstance& instance() const { return g_; }

    // Optimal objective, evaluated through this oracle so the weight sum uses
    // the same accumulation order as queries.
    Objective optimum() const {
        auto kr = kruskal(g_);
        BitString x(static_cast<std::size_t>(g_.m()));
        for (auto idx : kr.edge_indices) x[idx] = 1;
        return evaluate(Point{x});
    }

private:
    GraphInstance g_;
};

} // namespace bbox::mst
