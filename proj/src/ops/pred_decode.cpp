#include "bbox/ops/pred_decode.hpp"

namespace bbox::ops {

std::vector<bool> connected_mask(const PredVector& x) {
    const std::int32_t n = x.n;
    // 0 = unknown, 1 = connected, 2 = dead (cycle/self-loop)
    std::vector<std::uint8_t> state(static_cast<std::size_t>(n) + 1, 0);
    state[1] = 1;
    std::vector<std::int32_t> stack;
    for (std::int32_t v = 2; v <= n; ++v) {
        if (state[static_cast<std::size_t>(v)]) continue;
        stack.clear();
        std::int32_t u = v;
        // walk until a resolved node or a revisit within this walk
        std::vector<std::uint8_t> on_walk(static_cast<std::size_t>(n) + 1, 0);
        std::uint8_t result = 2;
        while (true) {
            if (state[static_cast<std::size_t>(u)]) {
                result = state[static_cast<std::size_t>(u)];
                break;
            }
            if (on_walk[static_cast<std::size_t>(u)]) {
                result = 2; // cycle
                break;
            }
            on_walk[static_cast<std::size_t>(u)] = 1;
            stack.push_back(u);
            std::int32_t p = x.get(u);
            if (p == u) {
                result = 2; // self-loop, detached
                break;
            }
            u = p;
        }
        for (std::int32_t w : stack) state[static_cast<std::size_t>(w)] = result;
    }
    std::vector<bool> mask(static_cast<std::size_t>(n) + 1, false);
    mask[1] = true;
    for (std::int32_t v = 2; v <= n; ++v) mask[static_cast<std::size_t>(v)] = state[static_cast<std::size_t>(v)] == 1;
    return mask;
}

std::optional<std::vector<std::int32_t>> path_from_source(const PredVector& x) {
    const std::int32_t n = x.n;
    auto mask = connected_mask(x);
    std::vector<std::int32_t> child(static_cast<std::size_t>(n) + 1, 0);
    std::int32_t conn = 0;
    for (std::int32_t v = 2; v <= n; ++v) {
        if (mask[static_cast<std::size_t>(v)]) {
            ++conn;
            std::int32_t p = x.get(v);
            if (child[static_cast<std::size_t>(p)]) return std::nullopt; // branching
            child[static_cast<std::size_t>(p)] = v;
        } else if (!x.self_loop(v)) {
            return std::nullopt; // junk off the path
        }
    }
    std::vector<std::int32_t> path{1};
    std::int32_t u = 1;
    while (child[static_cast<std::size_t>(u)]) {
        u = child[static_cast<std::size_t>(u)];
        path.push_back(u);
    }
    if (static_cast<std::int32_t>(path.size()) != conn + 1) return std::nullopt;
    return path;
}

std::optional<std::vector<std::int32_t>> tree_from_source(const PredVector& x) {
    const std::int32_t n = x.n;
    auto mask = connected_mask(x);
    std::vector<std::int32_t> parent(static_cast<std::size_t>(n) + 1, -1);
    parent[1] = 0;
    for (std::int32_t v = 2; v <= n; ++v) {
        if (mask[static_cast<std::size_t>(v)]) {
            parent[static_cast<std::size_t>(v)] = x.get(v);
        } else if (!x.self_loop(v)) {
            return std::nullopt; // junk outside the tree
        }
    }
    return parent;
}

} // namespace bbox::ops
