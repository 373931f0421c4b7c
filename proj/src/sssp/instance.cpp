#include "bbox/sssp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "bbox/core/objective.hpp"

namespace bbox::sssp {

DijkstraResult dijkstra_ref(const SSSPInstance& inst) {
    const std::int32_t n = inst.n();
    // adjacency
    std::vector<std::vector<std::pair<std::int32_t, double>>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& e : inst.graph.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
    }

    DijkstraResult res;
    res.dist.assign(static_cast<std::size_t>(n) + 1, INF);
    res.parent.assign(static_cast<std::size_t>(n) + 1, -1);
    res.dist[1] = 0.0;
    res.parent[1] = 0;
    std::vector<bool> done(static_cast<std::size_t>(n) + 1, false);

    // label-ordered scan keeps the tie-breaking deterministic
    for (std::int32_t round = 0; round < n; ++round) {
        std::int32_t best = 0;
        for (std::int32_t v = 1; v <= n; ++v)
            if (!done[static_cast<std::size_t>(v)] && res.dist[static_cast<std::size_t>(v)] < INF &&
                (best == 0 || res.dist[static_cast<std::size_t>(v)] < res.dist[static_cast<std::size_t>(best)]))
                best = v;
        if (best == 0) break;
        done[static_cast<std::size_t>(best)] = true;
        for (auto [to, w] : adj[static_cast<std::size_t>(best)]) {
            double cand = res.dist[static_cast<std::size_t>(best)] + w;
            if (cand < res.dist[static_cast<std::size_t>(to)] ||
                (cand == res.dist[static_cast<std::size_t>(to)] &&
                 best < res.parent[static_cast<std::size_t>(to)])) {
                res.dist[static_cast<std::size_t>(to)] = cand;
                res.parent[static_cast<std::size_t>(to)] = best;
            }
        }
    }

    // smallest height of a shortest path tree: minimize depth over valid
    // shortest-path predecessors, processing nodes in distance order
    std::vector<std::int32_t> order;
    for (std::int32_t v = 1; v <= n; ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        if (res.dist[static_cast<std::size_t>(a)] != res.dist[static_cast<std::size_t>(b)])
            return res.dist[static_cast<std::size_t>(a)] < res.dist[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<std::int32_t> depth(static_cast<std::size_t>(n) + 1, 0);
    for (std::int32_t v : order) {
        if (v == 1) continue;
        std::int32_t best_depth = n;
        for (auto [to, w] : adj[static_cast<std::size_t>(v)])
            if (res.dist[static_cast<std::size_t>(to)] + w == res.dist[static_cast<std::size_t>(v)])
                best_depth = std::min(best_depth, depth[static_cast<std::size_t>(to)] + 1);
        depth[static_cast<std::size_t>(v)] = best_depth;
        res.height = std::max(res.height, best_depth);
    }

    for (std::int32_t v = 2; v <= n; ++v) res.dist_sum += res.dist[static_cast<std::size_t>(v)];
    return res;
}

PredVector spt_point(const DijkstraResult& d, std::int32_t n) {
    PredVector x(n);
    for (std::int32_t v = 2; v <= n; ++v) x.set(v, d.parent[static_cast<std::size_t>(v)]);
    return x;
}

std::vector<double> optimal_tuple(const DijkstraResult& d, std::int32_t n) {
    std::vector<double> t;
    for (std::int32_t v = 2; v <= n; ++v) t.push_back(d.dist[static_cast<std::size_t>(v)]);
    return t;
}

namespace {

// Zigzag Hamiltonian path on Z_{2k}: i, i+1, i-1, i+2, i-2, ...; the k shifted
// copies decompose K_{2k} into Hamiltonian paths.
std::vector<std::int32_t> zigzag_path(std::int32_t n, std::int32_t shift) {
    std::vector<std::int32_t> seq;
    seq.push_back(shift);
    std::int32_t lo = 0, hi = 0;
    for (std::int32_t t = 1; t < n; ++t) {
        std::int32_t next;
        if (t % 2 == 1)
            next = shift + (++hi);
        else
            next = shift - (++lo);
        next = ((next % n) + n) % n;
        seq.push_back(next);
    }
    return seq;
}

std::vector<std::int32_t> parents_from_edges(
    std::int32_t n, const std::vector<std::pair<std::int32_t, std::int32_t>>& edges) {
    std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(n) + 1);
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<std::int32_t> parent(static_cast<std::size_t>(n) + 1, -1);
    parent[1] = 0;
    std::queue<std::int32_t> q;
    q.push(1);
    while (!q.empty()) {
        std::int32_t v = q.front();
        q.pop();
        for (std::int32_t to : adj[static_cast<std::size_t>(v)]) {
            if (parent[static_cast<std::size_t>(to)] == -1) {
                parent[static_cast<std::size_t>(to)] = v;
                q.push(to);
            }
        }
    }
    return parent;
}

} // namespace

std::vector<std::vector<std::int32_t>> decompose_Kn(std::int32_t n) {
    if (n < 2) throw InfeasibleInstance("decompose_Kn needs n >= 2");
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> trees;

    if (n % 2 == 0) {
        // n/2 Hamiltonian paths (labels are 1-based: vertex z+1)
        for (std::int32_t i = 0; i < n / 2; ++i) {
            auto seq = zigzag_path(n, i);
            std::vector<std::pair<std::int32_t, std::int32_t>> edges;
            for (std::size_t t = 0; t + 1 < seq.size(); ++t)
                edges.push_back({seq[t] + 1, seq[t + 1] + 1});
            trees.push_back(std::move(edges));
        }
    } else {
        // peel the star at node n, decompose K_{n-1}, complete each part with
        // one edge back to node n
        std::vector<std::pair<std::int32_t, std::int32_t>> star;
        for (std::int32_t v = 1; v < n; ++v) star.push_back({v, n});
        trees.push_back(std::move(star));
        for (std::int32_t i = 0; i < (n - 1) / 2; ++i) {
            auto seq = zigzag_path(n - 1, i);
            std::vector<std::pair<std::int32_t, std::int32_t>> edges;
            for (std::size_t t = 0; t + 1 < seq.size(); ++t)
                edges.push_back({seq[t] + 1, seq[t + 1] + 1});
            edges.push_back({seq[0] + 1, n}); // span node n
            trees.push_back(std::move(edges));
        }
    }

    std::vector<std::vector<std::int32_t>> parents;
    parents.reserve(trees.size());
    for (const auto& t : trees) parents.push_back(parents_from_edges(n, t));
    return parents;
}

SSSPInstance gen_hidden_path(std::int32_t n, std::uint64_t seed, bool complete) {
    if (n < 2) throw InfeasibleInstance("need n >= 2");
    RngStream rng(mix_seed(seed, 0x9A7B));
    std::vector<std::int32_t> perm;
    for (std::int32_t v = 2; v <= n; ++v) perm.push_back(v);
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.below(i))]);

    mst::GraphInstance g;
    g.n = n;
    std::vector<std::vector<bool>> on(static_cast<std::size_t>(n) + 1,
                                      std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    std::int32_t prev = 1;
    for (std::int32_t v : perm) {
        g.edges.push_back({std::min(prev, v), std::max(prev, v), 1.0});
        on[static_cast<std::size_t>(std::min(prev, v))][static_cast<std::size_t>(std::max(prev, v))] = true;
        prev = v;
    }
    if (complete) {
        for (std::int32_t u = 1; u <= n; ++u)
            for (std::int32_t v = u + 1; v <= n; ++v)
                if (!on[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                    g.edges.push_back({u, v, static_cast<double>(n)});
    }
    std::ostringstream key;
    key << "hpath:" << n << ":" << seed << ":" << complete;
    g.id = "hpath-" + std::to_string(fnv1a(key.str()) & 0xffffffffULL);
    return SSSPInstance::wrap(std::move(g));
}

SSSPInstance gen_complete_cheap_pred(std::int32_t n, std::uint64_t seed) {
    if (n < 2) throw InfeasibleInstance("need n >= 2");
    RngStream rng(mix_seed(seed, 0xCEAB));
    std::vector<std::int32_t> cheap_parent(static_cast<std::size_t>(n) + 1, 0);
    for (std::int32_t v = 2; v <= n; ++v)
        cheap_parent[static_cast<std::size_t>(v)] =
            static_cast<std::int32_t>(1 + rng.below(static_cast<std::uint64_t>(v - 1)));
    mst::GraphInstance g;
    g.n = n;
    for (std::int32_t u = 1; u <= n; ++u)
        for (std::int32_t v = u + 1; v <= n; ++v)
            g.edges.push_back(
                {u, v, cheap_parent[static_cast<std::size_t>(v)] == u ? 1.0 : static_cast<double>(n)});
    g.id = "cheap-" + std::to_string(fnv1a("cheap:" + std::to_string(n) + ":" + std::to_string(seed)) &
                                     0xffffffffULL);
    return SSSPInstance::wrap(std::move(g));
}

SSSPInstance gen_random_connected(std::int32_t n, std::int64_t m, const mst::WeightMode& mode,
                                  std::uint64_t seed) {
    return SSSPInstance::wrap(mst::gen_random_connected(n, m, mode, seed));
}

std::string to_dimacs(const SSSPInstance& inst) {
    std::ostringstream os;
    os << "c source 1\n";
    os.precision(17);
    os << "c bigC " << inst.big_c << "\n";
    os << mst::to_dimacs(inst.graph);
    return os.str();
}

SSSPInstance sssp_from_dimacs(const std::string& text) {
    SSSPInstance inst;
    inst.graph = mst::from_dimacs(text);
    inst.big_c = static_cast<double>(inst.graph.n) * inst.graph.max_weight();
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag, key;
        ls >> tag >> key;
        if (tag == "c" && key == "bigC") ls >> inst.big_c;
    }
    return inst;
}

} // namespace bbox::sssp
