#include "bbox/mst/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace bbox::mst {

namespace {

void shuffle32(std::vector<std::int32_t>& v, RngStream& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(i))]);
}

std::vector<double> make_weights(std::int64_t m, const WeightMode& mode, RngStream& rng) {
    std::vector<double> w(static_cast<std::size_t>(m));
    if (std::holds_alternative<DistinctUniform>(mode)) {
        std::vector<std::int32_t> perm(static_cast<std::size_t>(m));
        std::iota(perm.begin(), perm.end(), 1);
        shuffle32(perm, rng);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<double>(perm[i]);
    } else if (std::holds_alternative<UnitWeights>(mode)) {
        std::fill(w.begin(), w.end(), 1.0);
    } else {
        const auto& rr = std::get<RandomReals>(mode);
        for (auto& x : w) x = rr.lo + (rr.hi - rr.lo) * rng.unit();
    }
    return w;
}

// Uniform labeled tree on n nodes from a uniform Pruefer sequence; exactly
// uniform over the n^(n-2) trees.
std::vector<Edge> random_spanning_tree(std::int32_t n, RngStream& rng) {
    std::vector<Edge> edges;
    if (n == 2) {
        edges.push_back({1, 2, 1.0});
        return edges;
    }
    std::vector<std::int32_t> prufer(static_cast<std::size_t>(n - 2));
    for (auto& p : prufer) p = static_cast<std::int32_t>(1 + rng.below(static_cast<std::uint64_t>(n)));
    std::vector<std::int32_t> degree(static_cast<std::size_t>(n) + 1, 1);
    for (auto p : prufer) ++degree[static_cast<std::size_t>(p)];
    std::set<std::int32_t> leaves;
    for (std::int32_t v = 1; v <= n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    for (auto p : prufer) {
        std::int32_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({std::min(leaf, p), std::max(leaf, p), 1.0});
        if (--degree[static_cast<std::size_t>(p)] == 1) leaves.insert(p);
    }
    std::int32_t a = *leaves.begin();
    std::int32_t b = *std::next(leaves.begin());
    edges.push_back({std::min(a, b), std::max(a, b), 1.0});
    return edges;
}

std::string hash_id(const std::string& family, const std::string& detail) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(detail)));
    return family + "-" + std::string(buf, 12);
}

} // namespace

bool GraphInstance::has_duplicate_weights() const {
    std::vector<double> w;
    w.reserve(edges.size());
    for (const auto& e : edges) w.push_back(e.w);
    std::sort(w.begin(), w.end());
    return std::adjacent_find(w.begin(), w.end()) != w.end();
}

bool GraphInstance::is_distinct_perm() const {
    std::vector<double> w;
    w.reserve(edges.size());
    for (const auto& e : edges) w.push_back(e.w);
    std::sort(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != static_cast<double>(i + 1)) return false;
    return true;
}

bool GraphInstance::connected() const {
    UnionFind uf(n);
    std::int32_t parts = n;
    for (const auto& e : edges)
        if (uf.unite(e.u, e.v)) --parts;
    return parts == 1;
}

std::string to_string(const WeightMode& mode) {
    if (std::holds_alternative<DistinctUniform>(mode)) return "distinct";
    if (std::holds_alternative<UnitWeights>(mode)) return "unit";
    const auto& rr = std::get<RandomReals>(mode);
    std::ostringstream os;
    os << "reals[" << rr.lo << "," << rr.hi << "]";
    return os.str();
}

GraphInstance gen_path(std::int64_t m, const WeightMode& mode) {
    if (m < 1) throw InfeasibleInstance("path needs m >= 1");
    GraphInstance g;
    g.n = static_cast<std::int32_t>(m + 1);
    RngStream rng(fnv1a("path" + std::to_string(m)));
    auto w = make_weights(m, mode, rng);
    for (std::int64_t i = 0; i < m; ++i)
        g.edges.push_back({static_cast<std::int32_t>(i + 1), static_cast<std::int32_t>(i + 2),
                           w[static_cast<std::size_t>(i)]});
    g.id = hash_id("path", "path:" + std::to_string(m) + ":" + to_string(mode));
    return g;
}

GraphInstance gen_complete_hidden_tree(std::int32_t n, std::uint64_t seed) {
    if (n < 2) throw InfeasibleInstance("need n >= 2");
    RngStream rng(mix_seed(seed, 0xC0FFEE));
    GraphInstance g;
    g.n = n;
    auto tree = random_spanning_tree(n, rng);
    std::set<std::pair<std::int32_t, std::int32_t>> cheap;
    for (const auto& e : tree) cheap.insert({e.u, e.v});
    for (std::int32_t u = 1; u <= n; ++u)
        for (std::int32_t v = u + 1; v <= n; ++v)
            g.edges.push_back({u, v, cheap.count({u, v}) ? 1.0 : 2.0});
    g.id = hash_id("khidden", "khidden:" + std::to_string(n) + ":" + std::to_string(seed));
    return g;
}

GraphInstance gen_random_connected(std::int32_t n, std::int64_t m, const WeightMode& mode,
                                   std::uint64_t seed) {
    const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m)
        throw InfeasibleInstance("m out of range for a connected simple graph");
    RngStream rng(mix_seed(seed, 0xBADD));
    GraphInstance g;
    g.n = n;
    auto tree = random_spanning_tree(n, rng);
    std::set<std::pair<std::int32_t, std::int32_t>> used;
    for (const auto& e : tree) {
        used.insert({e.u, e.v});
        g.edges.push_back(e);
    }
    if (m == max_m) {
        g.edges.clear();
        for (std::int32_t u = 1; u <= n; ++u)
            for (std::int32_t v = u + 1; v <= n; ++v) g.edges.push_back({u, v, 1.0});
    } else {
        while (static_cast<std::int64_t>(g.edges.size()) < m) {
            auto u = static_cast<std::int32_t>(1 + rng.below(static_cast<std::uint64_t>(n)));
            auto v = static_cast<std::int32_t>(1 + rng.below(static_cast<std::uint64_t>(n)));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (used.count({u, v})) continue;
            used.insert({u, v});
            g.edges.push_back({u, v, 1.0});
        }
    }
    auto w = make_weights(m, mode, rng);
    for (std::size_t i = 0; i < g.edges.size(); ++i) g.edges[i].w = w[i];
    std::ostringstream key;
    key << "rand:" << n << ":" << m << ":" << to_string(mode) << ":" << seed;
    g.id = hash_id("rand", key.str());
    return g;
}

KruskalResult kruskal(const GraphInstance& g) {
    std::vector<std::size_t> order(g.edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.edges[a].w < g.edges[b].w;
    });
    UnionFind uf(g.n);
    KruskalResult res;
    for (std::size_t idx : order) {
        const auto& e = g.edges[idx];
        if (uf.unite(e.u, e.v)) {
            res.weight += e.w;
            res.edge_indices.push_back(idx);
        }
    }
    return res;
}

std::string to_dimacs(const GraphInstance& g) {
    std::ostringstream os;
    os << "p edge " << g.n << " " << g.m() << "\n";
    os.precision(17);
    for (const auto& e : g.edges) os << "e " << e.u << " " << e.v << " " << e.w << "\n";
    return os.str();
}

GraphInstance from_dimacs(const std::string& text) {
    std::istringstream is(text);
    GraphInstance g;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string kind;
            std::int64_t m;
            ls >> kind >> g.n >> m;
        } else if (tag == 'e') {
            Edge e;
            ls >> e.u >> e.v >> e.w;
            g.edges.push_back(e);
        }
    }
    if (g.n == 0) throw ConfigError("missing 'p edge' header");
    g.id = hash_id("file", to_dimacs(g));
    return g;
}

} // namespace bbox::mst
