#include "bbox/sssp/oracles.hpp"

namespace bbox::sssp::detail {

std::vector<double> chain_distances(const WeightTable& wt, const PredVector& x) {
    const std::int32_t n = x.n;
    std::vector<double> dist(static_cast<std::size_t>(n) + 1,
                             std::numeric_limits<double>::quiet_NaN());
    dist[1] = 0.0;
    std::vector<std::uint8_t> on_walk(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int32_t> stack;

    for (std::int32_t v = 2; v <= n; ++v) {
        if (!std::isnan(dist[static_cast<std::size_t>(v)])) continue;
        stack.clear();
        std::int32_t u = v;
        double terminal = INF;
        bool resolved = false;
        while (!resolved) {
            if (!std::isnan(dist[static_cast<std::size_t>(u)])) {
                terminal = dist[static_cast<std::size_t>(u)];
                break;
            }
            if (on_walk[static_cast<std::size_t>(u)]) break; // cycle -> INF
            on_walk[static_cast<std::size_t>(u)] = 1;
            stack.push_back(u);
            std::int32_t p = x.get(u);
            if (p == u) break; // self-loop -> INF
            if (wt.get(u, p) == 0.0) break; // edge not in the input graph -> INF
            u = p;
        }
        // unwind from the source side so sums associate exactly as Dijkstra's
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            std::int32_t node = *it;
            on_walk[static_cast<std::size_t>(node)] = 0;
            if (std::isinf(terminal)) {
                dist[static_cast<std::size_t>(node)] = INF;
            } else {
                terminal = terminal + wt.get(node, x.get(node));
                dist[static_cast<std::size_t>(node)] = terminal;
            }
        }
    }
    return dist;
}

} // namespace bbox::sssp::detail
